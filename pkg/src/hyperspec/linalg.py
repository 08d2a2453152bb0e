"""Exact dense linear algebra over F_p.

Everything here works on numpy int64 arrays with entries in [0, p) and a prime
modulus p. No floats anywhere; RREF matrices are canonical, so two subspaces
are equal iff their stored bases are identical arrays.
"""

from __future__ import annotations

import numpy as np


def npmod(a, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


def modinv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return npmod(np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64), p)


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns (R, pivots) where R has no zero rows and R[i, pivots[i]] = 1 with
    zeros elsewhere in each pivot column.
    """
    a = npmod(np.atleast_2d(np.asarray(mat, dtype=np.int64)).copy(), p)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = npmod(a[r] * modinv(int(a[r, c]), p), p)
        other = np.nonzero(a[:, c])[0]
        for j in other:
            if j != r:
                a[j] = npmod(a[j] - a[j, c] * a[r], p)
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


def rank(mat, p: int) -> int:
    return rref(mat, p)[0].shape[0]


def nullspace(mat, p: int) -> np.ndarray:
    """RREF basis (rows) of {x : mat @ x = 0 mod p}."""
    a = np.atleast_2d(np.asarray(mat, dtype=np.int64))
    n = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return np.zeros((0, n), dtype=np.int64)
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-int(r[i, c])) % p
    return rref(basis, p)[0]


def reduce_rows(vecs, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Residual of each row of vecs after reduction against an RREF basis."""
    v = npmod(np.atleast_2d(np.asarray(vecs, dtype=np.int64)), p)
    if basis.shape[0] == 0:
        return v
    return npmod(v - v[:, pivots] @ basis, p)


def in_span(basis: np.ndarray, pivots: list[int], vec, p: int) -> bool:
    return not reduce_rows(vec, basis, pivots, p).any()


def span_contains(outer: np.ndarray, outer_pivots: list[int], inner: np.ndarray, p: int) -> bool:
    if inner.shape[0] == 0:
        return True
    return not reduce_rows(inner, outer, outer_pivots, p).any()


def span_sum(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[0] == 0:
        return rref(b, p)[0]
    if b.shape[0] == 0:
        return rref(a, p)[0]
    return rref(np.vstack([a, b]), p)[0]


def solve(mat, rhs, p: int) -> np.ndarray | None:
    """One solution of mat @ x = rhs, or None."""
    a = np.atleast_2d(np.asarray(mat, dtype=np.int64))
    b = npmod(np.asarray(rhs, dtype=np.int64).reshape(-1, 1), p)
    aug, pivots = rref(np.hstack([npmod(a, p), b]), p)
    n = a.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, -1]
    return x


def preimage(mat, sub_basis: np.ndarray, p: int) -> np.ndarray:
    """RREF basis of {x : mat @ x in rowspan(sub_basis)}."""
    a = np.atleast_2d(np.asarray(mat, dtype=np.int64))
    checks = nullspace(sub_basis, p) if sub_basis.shape[0] else np.eye(a.shape[0], dtype=np.int64)
    if checks.shape[0] == 0:
        return rref(np.eye(a.shape[1], dtype=np.int64), p)[0]
    return nullspace(matmul(checks, a, p), p)


def enumerate_vectors(p: int, n: int) -> np.ndarray:
    """All p**n vectors of F_p^n, one per row, lowest coordinate fastest."""
    count = p**n
    idx = np.arange(count, dtype=np.int64)
    return (idx[:, None] // p ** np.arange(n, dtype=np.int64)) % p


def batch_tensor_rank_class(t: np.ndarray, p: int) -> np.ndarray:
    """Classify each (a x b) matrix in a batch: 0 zero, 1 rank one, 2 rank >= 2.

    t has shape (N, a, b). Only the 0 / 1 / >=2 trichotomy is decided (all the
    callers need), via the 2x2 minor criterion.
    """
    t = npmod(t, p)
    n, a, b = t.shape
    out = np.zeros(n, dtype=np.int64)
    nonzero = t.reshape(n, -1).any(axis=1)
    out[nonzero] = 1
    if a >= 2 and b >= 2:
        ge2 = np.zeros(n, dtype=bool)
        for r1 in range(a):
            for r2 in range(r1 + 1, a):
                for c1 in range(b):
                    for c2 in range(c1 + 1, b):
                        det = npmod(t[:, r1, c1] * t[:, r2, c2] - t[:, r1, c2] * t[:, r2, c1], p)
                        ge2 |= det != 0
        out[ge2 & nonzero] = 2
    return out


def charpoly(mat, p: int) -> list[int]:
    """Characteristic polynomial of a square matrix over F_p, lowest degree first.

    Hessenberg reduction then the standard recurrence; exact over any prime field.
    """
    h = npmod(np.array(mat, dtype=np.int64, copy=True), p)
    n = h.shape[0]
    if n == 0:
        return [1]
    for c in range(n - 1):
        piv = None
        for r in range(c + 1, n):
            if h[r, c] % p:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            h[[c + 1, piv]] = h[[piv, c + 1]]
            h[:, [c + 1, piv]] = h[:, [piv, c + 1]]
        inv = modinv(int(h[c + 1, c]), p)
        for r in range(c + 2, n):
            f = int(h[r, c]) * inv % p
            if f:
                h[r] = npmod(h[r] - f * h[c + 1], p)
                h[:, c + 1] = npmod(h[:, c + 1] + f * h[:, r], p)
    # charpoly of leading k x k Hessenberg block, coefficients lowest-first
    polys: list[list[int]] = [[1]]
    for k in range(1, n + 1):
        term = [(-int(h[k - 1, k - 1])) % p * c % p for c in polys[k - 1]]
        poly = [0] + polys[k - 1]
        poly = [(poly[i] + (term[i] if i < len(term) else 0)) % p for i in range(len(poly))]
        minor = 1
        for i in range(k - 2, -1, -1):
            minor = minor * int(h[i + 1, i]) % p
            coeff = (-int(h[i, k - 1])) % p * minor % p
            for j, c in enumerate(polys[i]):
                poly[j] = (poly[j] + coeff * c) % p
        polys.append(poly)
    return polys[n]

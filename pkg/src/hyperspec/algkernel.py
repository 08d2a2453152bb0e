"""Finite-dimensional commutative algebras over F_p by structure constants.

Ideals are echelonized subspaces, so equality of ideals is equality of stored
bases. Primes of a finite-dimensional algebra are exactly the maximal ideals;
the spectrum is enumerated by splitting the reduced quotient along its
Frobenius fixed space, which is exact in characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .gfarith import FpPoly, PrimeField, minimal_polynomial
from .linalg import (
    enumerate_vectors,
    in_span,
    matmul,
    modinv,
    npmod,
    nullspace,
    preimage,
    reduce_rows,
    rref,
    solve,
    span_contains,
)

EXHAUSTIVE_QUOTIENT_BOUND = 3**6


class SCAlgebra:
    """Commutative associative unital algebra over F_p, given by an
    n x n x n structure tensor: e_i * e_j = sum_k mul[i,j,k] e_k.

    All three laws are verified on every basis triple at construction.
    """

    def __init__(self, field: PrimeField, basis: list[str], mul, unit, generator=None, validate: bool = True):
        self.field = field
        self.basis = tuple(str(b) for b in basis)
        self.dim = len(self.basis)
        self.mul = npmod(np.asarray(mul, dtype=np.int64), field.p)
        self.unit = npmod(np.asarray(unit, dtype=np.int64), field.p)
        self.generator = None if generator is None else npmod(np.asarray(generator, dtype=np.int64), field.p)
        if self.mul.shape != (self.dim, self.dim, self.dim) or self.unit.shape != (self.dim,):
            raise ValueError("structure tensor / unit dimensions are inconsistent")
        if validate:
            self._validate()
        self.mul.setflags(write=False)
        self.unit.setflags(write=False)
        self._spectrum: list[PrimePoint] | None = None

    def _validate(self) -> None:
        p = self.field.p
        if not (self.mul == self.mul.transpose(1, 0, 2)).all():
            raise ValueError("multiplication is not commutative")
        left = npmod(np.einsum("ijm,mkl->ijkl", self.mul, self.mul), p)
        right = npmod(np.einsum("jkm,iml->ijkl", self.mul, self.mul), p)
        if not (left == right).all():
            i, j, k = (int(v) for v in np.argwhere((left != right).any(axis=3))[0])
            raise ValueError(f"multiplication is not associative at basis triple ({i},{j},{k})")
        prods = npmod(np.einsum("i,ijk->jk", self.unit, self.mul), p)
        if not (prods == np.eye(self.dim, dtype=np.int64)).all():
            raise ValueError("declared unit is not a multiplicative identity")

    def mul_vec(self, u, v) -> np.ndarray:
        p = self.field.p
        return npmod(np.einsum("i,j,ijk->k", npmod(u, p), npmod(v, p), self.mul), p)

    def power(self, v, e: int) -> np.ndarray:
        out = self.unit.copy()
        base = npmod(v, self.field.p)
        while e:
            if e & 1:
                out = self.mul_vec(out, base)
            base = self.mul_vec(base, base)
            e >>= 1
        return out

    def left_mul_matrix(self, v) -> np.ndarray:
        """Matrix of x -> v*x."""
        p = self.field.p
        return npmod(np.einsum("i,ijk->kj", npmod(v, p), self.mul), p)

    @property
    def mulmat(self) -> np.ndarray:
        """Multiplication as a linear map A (x) A -> A, shape (n, n^2);
        column i*n+j is e_i * e_j."""
        return self.mul.reshape(self.dim * self.dim, self.dim).T

    def element_from_poly(self, poly: FpPoly) -> np.ndarray:
        if self.generator is None:
            raise ValueError("algebra has no designated generator")
        acc = np.zeros(self.dim, dtype=np.int64)
        for c in reversed(poly.coeffs):
            acc = self.mul_vec(acc, self.generator)
            acc = npmod(acc + c * self.unit, self.field.p)
        return acc

    def is_power_basis(self) -> bool:
        return self.generator is not None and self.basis == tuple(
            "1" if k == 0 else ("t" if k == 1 else f"t{k}") for k in range(self.dim)
        )

    def to_json(self) -> dict:
        doc = {
            "p": self.field.p,
            "dim": self.dim,
            "basis": list(self.basis),
            "mul": self.mul.tolist(),
            "unit": self.unit.tolist(),
        }
        if self.generator is not None:
            doc["generator"] = self.generator.tolist()
        return doc

    @staticmethod
    def from_json(doc: dict) -> "SCAlgebra":
        return SCAlgebra(
            PrimeField(int(doc["p"])),
            [str(b) for b in doc["basis"]],
            doc["mul"],
            doc["unit"],
            generator=doc.get("generator"),
        )


def monogenic_algebra(field: PrimeField, modulus: FpPoly) -> SCAlgebra:
    """F_p[T]/(modulus) on the power basis 1, t, ..., t^(d-1)."""
    if not modulus.is_monic() or modulus.degree < 1:
        raise ValueError("modulus must be monic of degree >= 1")
    d = modulus.degree
    powers = []
    t = FpPoly.x(field)
    acc = FpPoly.one(field)
    for k in range(2 * d - 1):
        powers.append(acc)
        acc = (acc * t) % modulus
    coords = np.zeros((2 * d - 1, d), dtype=np.int64)
    for k, q in enumerate(powers):
        for i, c in enumerate(q.coeffs):
            coords[k, i] = c
    mul = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            mul[i, j] = coords[i + j]
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    gen = np.zeros(d, dtype=np.int64)
    if d == 1:
        gen[0] = (-modulus.coeffs[0]) % field.p
    else:
        gen[1] = 1
    names = ["1" if k == 0 else ("t" if k == 1 else f"t{k}") for k in range(d)]
    return SCAlgebra(field, names, mul, unit, generator=gen)


@dataclass
class LinMap:
    """Linear map between coordinate spaces of algebras; matrix shape
    (dst dim, src dim), acting as mat @ v."""

    mat: np.ndarray
    src: SCAlgebra | None = None
    dst: SCAlgebra | None = None
    section: np.ndarray | None = None  # right inverse, when meaningful

    def apply(self, v) -> np.ndarray:
        p = (self.src or self.dst).field.p
        return matmul(self.mat, np.asarray(v, dtype=np.int64), p)

    def then(self, other: "LinMap") -> "LinMap":
        p = (self.src or self.dst).field.p
        return LinMap(matmul(other.mat, self.mat, p), src=self.src, dst=other.dst)

    def is_algebra_hom(self) -> bool:
        if self.src is None or self.dst is None:
            raise ValueError("algebra-hom check needs both source and target algebras")
        p = self.src.field.p
        if not (self.apply(self.src.unit) == self.dst.unit).all():
            return False
        lhs = npmod(np.einsum("kx,ijx->kij", self.mat, self.src.mul), p)
        rhs = npmod(np.einsum("ai,bj,abk->kij", self.mat, self.mat, self.dst.mul), p)
        return bool((lhs == rhs).all())


class IdealSubspace:
    """An ideal of an SCAlgebra stored as a reduced-row-echelon basis, so two
    equal ideals have identical stored bases."""

    def __init__(self, algebra: SCAlgebra, vectors, check_absorbing: bool = False):
        self.algebra = algebra
        vecs = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        if vecs.size == 0:
            vecs = np.zeros((0, algebra.dim), dtype=np.int64)
        self.basis, self.pivots = rref(vecs, algebra.field.p)
        self.basis.setflags(write=False)
        if check_absorbing and not self.is_absorbing():
            raise ValueError("subspace is not an ideal (not absorbing)")

    @staticmethod
    def from_generators(algebra: SCAlgebra, gens) -> "IdealSubspace":
        rows = []
        for g in np.atleast_2d(np.asarray(gens, dtype=np.int64)):
            rows.append(algebra.left_mul_matrix(g).T)
        stacked = np.vstack(rows) if rows else np.zeros((0, algebra.dim), dtype=np.int64)
        return IdealSubspace(algebra, stacked)

    @staticmethod
    def from_poly(algebra: SCAlgebra, poly: FpPoly) -> "IdealSubspace":
        return IdealSubspace.from_generators(algebra, [algebra.element_from_poly(poly)])

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_unit_ideal(self) -> bool:
        return self.contains_vector(self.algebra.unit)

    def is_absorbing(self) -> bool:
        if self.dim == 0:
            return True
        prods = npmod(np.einsum("ri,ijk->rjk", self.basis, self.algebra.mul), self.algebra.field.p)
        flat = prods.reshape(-1, self.algebra.dim)
        return not reduce_rows(flat, self.basis, self.pivots, self.algebra.field.p).any()

    def contains_vector(self, v) -> bool:
        return in_span(self.basis, self.pivots, v, self.algebra.field.p)

    def contains(self, other: "IdealSubspace") -> bool:
        return span_contains(self.basis, self.pivots, other.basis, self.algebra.field.p)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IdealSubspace)
            and self.basis.shape == other.basis.shape
            and bool((self.basis == other.basis).all())
        )

    def __hash__(self) -> int:
        return hash((self.basis.shape, self.basis.tobytes()))

    def sort_key(self) -> tuple:
        return (self.dim, tuple(int(x) for x in self.basis.flatten()))

    def generator_poly(self) -> FpPoly | None:
        """Monic polynomial generating this ideal, for power-basis algebras."""
        alg = self.algebra
        if not alg.is_power_basis():
            return None
        field = alg.field
        # reconstruct the defining modulus from t^(d-1) * t
        top = alg.mul_vec(np.eye(alg.dim, dtype=np.int64)[alg.dim - 1], alg.generator)
        mod_coeffs = [(-int(c)) % field.p for c in top]
        mod_coeffs += [0] * (alg.dim - len(mod_coeffs)) + [1]
        g = FpPoly.make(field, mod_coeffs)
        for row in self.basis:
            g = g.gcd(FpPoly.make(field, [int(c) for c in row]))
        return g.monic()

    def to_json(self) -> list:
        return self.basis.tolist()


def tensor_algebra(a: SCAlgebra, b: SCAlgebra) -> SCAlgebra:
    """A (x) B with basis pairs ordered (i,j) -> i*dim(B)+j, matching kron."""
    if a.field.p != b.field.p:
        raise ValueError("tensor factors must share the base field")
    n, m = a.dim, b.dim
    mul = npmod(np.einsum("ikr,jls->ijklrs", a.mul, b.mul), a.field.p).reshape(n * m, n * m, n * m)
    unit = np.kron(a.unit, b.unit) % a.field.p
    names = [f"{x}|{y}" for x in a.basis for y in b.basis]
    return SCAlgebra(a.field, names, mul, unit)


def tensor_square_mul(alg: SCAlgebra, u, v) -> np.ndarray:
    """Product of two elements of A (x) A without materializing its tensor."""
    n = alg.dim
    p = alg.field.p
    uu = npmod(u, p).reshape(n, n)
    vv = npmod(v, p).reshape(n, n)
    out = np.einsum("ij,kl,ikr,jls->rs", uu, vv, alg.mul, alg.mul)
    return npmod(out, p).reshape(n * n)


def quotient_algebra(alg: SCAlgebra, ideal: IdealSubspace) -> tuple[SCAlgebra, LinMap]:
    """A/I with the surjection pi; pi.section lifts quotient basis vectors."""
    p = alg.field.p
    if ideal.is_unit_ideal():
        raise ValueError("unit ideal: quotient would be the zero ring")
    if not ideal.is_absorbing():
        raise ValueError("subspace is not an ideal")
    n = alg.dim
    pivots = ideal.pivots
    free = [c for c in range(n) if c not in pivots]
    d = len(free)
    # pi(x) = residual coordinates on the free positions
    pi = np.zeros((d, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    resid = reduce_rows(eye, ideal.basis, pivots, p)
    for k, c in enumerate(free):
        pi[k] = resid[:, c]
    section = eye[:, free]
    mul = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            mul[i, j] = matmul(pi, alg.mul_vec(section[:, i], section[:, j]), p)
    unit = matmul(pi, alg.unit, p)
    gen = None if alg.generator is None else matmul(pi, alg.generator, p)
    names = [alg.basis[c] for c in free]
    quo = SCAlgebra(alg.field, names, mul, unit, generator=gen)
    return quo, LinMap(pi, src=alg, dst=quo, section=section)


def nilradical(alg: SCAlgebra) -> IdealSubspace:
    """Kernel of the F_p-linear map x -> x^(p^m) with p^m >= dim."""
    p = alg.field.p
    m = 1
    while p**m < alg.dim:
        m += 1
    frob = np.zeros((alg.dim, alg.dim), dtype=np.int64)
    eye = np.eye(alg.dim, dtype=np.int64)
    for i in range(alg.dim):
        frob[:, i] = alg.power(eye[i], p)
    total = eye
    for _ in range(m):
        total = matmul(frob, total, p)
    return IdealSubspace(alg, nullspace(total, p))


@dataclass
class PrimePoint:
    """A maximal (= prime) ideal with its residue-field data."""

    ideal: IdealSubspace
    degree: int
    residue: SCAlgebra
    resmap: LinMap
    label: str
    index: int = dc_field(default=-1)

    def __repr__(self) -> str:
        return f"PrimePoint({self.label}, deg={self.degree})"


def _split_minpoly(alg: SCAlgebra, elem: np.ndarray, unit: np.ndarray) -> FpPoly:
    """Minimal polynomial of elem within the unital subalgebra unit*A."""
    p = alg.field.p
    powers = [unit.copy()]
    for _ in range(alg.dim):
        powers.append(alg.mul_vec(powers[-1], elem))
    rows = np.array(powers, dtype=np.int64)
    for d in range(1, alg.dim + 1):
        sol = solve(rows[:d].T, rows[d], p)
        if sol is not None:
            return FpPoly.make(alg.field, [(-int(c)) % p for c in sol] + [1])
    raise RuntimeError("unreachable")


def maximal_spectrum(alg: SCAlgebra) -> list[PrimePoint]:
    """All maximal ideals with residue data, ordered by
    (residue degree, lexicographic echelon basis)."""
    if alg._spectrum is not None:
        return alg._spectrum
    p = alg.field.p
    nil = nilradical(alg)
    red, pi_red = quotient_algebra(alg, nil)
    eye = np.eye(red.dim, dtype=np.int64)
    frob = np.zeros((red.dim, red.dim), dtype=np.int64)
    for i in range(red.dim):
        frob[:, i] = red.power(eye[i], p)
    fixed = nullspace(npmod(frob - eye, p), p)

    idems = [red.unit.copy()]
    for u in fixed:
        refined = []
        for e in idems:
            ue = red.mul_vec(u, e)
            m = _split_minpoly(red, ue, e)
            roots = [a for a in range(p) if m.eval(a) == 0]
            if len(roots) != m.degree:
                raise RuntimeError("Frobenius-fixed element has a non-split minimal polynomial")
            if len(roots) <= 1:
                refined.append(e)
                continue
            for a in roots:
                f = e.copy()
                for b in roots:
                    if b == a:
                        continue
                    f = red.mul_vec(f, npmod(ue - b * e, p))
                    f = npmod(f * modinv((a - b) % p, p), p)
                refined.append(f)
        idems = refined
    if len(idems) != fixed.shape[0]:
        raise RuntimeError("idempotent splitting did not reach the full fixed space")

    points = []
    for e in idems:
        complement = npmod(red.unit - e, p)
        mbar_rows = red.left_mul_matrix(complement).T
        mbar = rref(mbar_rows, p)[0]
        m_ideal = IdealSubspace(alg, preimage(pi_red.mat, mbar, p))
        residue, resmap = quotient_algebra(alg, m_ideal)
        label = _point_label(alg, residue, m_ideal)
        points.append(PrimePoint(m_ideal, residue.dim, residue, resmap, label))
    points.sort(key=lambda pt: (pt.degree,) + pt.ideal.sort_key())
    for i, pt in enumerate(points):
        pt.index = i
    alg._spectrum = points
    return points


def _point_label(alg: SCAlgebra, residue: SCAlgebra, ideal: IdealSubspace) -> str:
    if residue.generator is not None:
        return f"({minimal_polynomial(residue.generator, residue)})"
    rows = ";".join(",".join(str(int(c)) for c in row) for row in ideal.basis)
    return f"(ker:{rows})"


def ideal_is_prime(alg: SCAlgebra, ideal: IdealSubspace) -> bool:
    """Independent primality test: A/I has no zero divisors.

    Exhaustive scan of the quotient when it has at most 3^6 elements, else a
    kernel analysis (reduced and single Frobenius-fixed dimension).
    """
    if ideal.is_unit_ideal():
        return False
    quo, _ = quotient_algebra(alg, ideal)
    p = alg.field.p
    if p**quo.dim <= EXHAUSTIVE_QUOTIENT_BOUND:
        vecs = enumerate_vectors(p, quo.dim)[1:]  # skip zero
        for u in vecs:
            prods = matmul(quo.left_mul_matrix(u), vecs.T, p)
            if (~prods.any(axis=0)).any():
                return False
        return True
    if nilradical(quo).dim != 0:
        return False
    eye = np.eye(quo.dim, dtype=np.int64)
    frob = np.zeros((quo.dim, quo.dim), dtype=np.int64)
    for i in range(quo.dim):
        frob[:, i] = quo.power(eye[i], p)
    return nullspace(npmod(frob - eye, p), p).shape[0] == 1

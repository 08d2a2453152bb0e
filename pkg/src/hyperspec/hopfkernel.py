"""Hopf-algebra structure on a structure-constant algebra.

Coproduct, counit, and antipode are supplied as matrices and verified, never
inferred. Only the commutative case is representable; the antipode is
required to be an algebra map and an involution, which the commutative case
guarantees and the reversibility check exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algkernel import IdealSubspace, LinMap, SCAlgebra, monogenic_algebra, quotient_algebra, tensor_square_mul
from .gfarith import FpPoly, PrimeField, is_prime
from .hyperkernel import CheckResult, LawReport
from .linalg import matmul, npmod, rref, span_contains, span_sum


def twist_matrix(n: int) -> np.ndarray:
    t = np.zeros((n * n, n * n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            t[a * n + b, b * n + a] = 1
    return t


class HopfData:
    """A commutative Hopf algebra: algebra plus coproduct (n^2 x n matrix),
    counit (1 x n), antipode (n x n), columns = images of basis vectors."""

    def __init__(self, algebra: SCAlgebra, delta, counit, antipode, name: str | None = None,
                 descent_ideal_poly: FpPoly | None = None):
        p = algebra.field.p
        n = algebra.dim
        self.algebra = algebra
        self.delta = npmod(np.asarray(delta, dtype=np.int64), p)
        self.counit = npmod(np.asarray(counit, dtype=np.int64).reshape(1, n), p)
        self.antipode = npmod(np.asarray(antipode, dtype=np.int64), p)
        self.name = name
        self.descent_ideal_poly = descent_ideal_poly
        if self.delta.shape != (n * n, n) or self.antipode.shape != (n, n):
            raise ValueError("coproduct/antipode dimensions are inconsistent with the algebra")
        for m in (self.delta, self.counit, self.antipode):
            m.setflags(write=False)
        self._verified: bool | None = None
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def ensure_verified(self) -> None:
        if self._verified is None:
            self._verified = verify_hopf(self).ok
        if not self._verified:
            raise ValueError("Hopf axioms fail; run verify_hopf for the witness")

    def to_json(self) -> dict:
        doc = self.algebra.to_json()
        doc["delta"] = self.delta.T.tolist()
        doc["counit"] = self.counit[0].tolist()
        doc["antipode"] = self.antipode.T.tolist()
        if self.name:
            doc["name"] = self.name
        return doc

    @staticmethod
    def from_json(doc: dict) -> "HopfData":
        alg = SCAlgebra.from_json(doc)
        delta = np.asarray(doc["delta"], dtype=np.int64).T
        antipode = np.asarray(doc["antipode"], dtype=np.int64).T
        return HopfData(alg, delta, doc["counit"], antipode, name=doc.get("name"))

    def __repr__(self) -> str:
        return f"HopfData({self.name or self.algebra.basis})"


def verify_hopf(h: HopfData) -> LawReport:
    """Exact matrix verification of every Hopf axiom used downstream."""
    alg = h.algebra
    p = alg.field.p
    n = alg.dim
    eye = np.eye(n, dtype=np.int64)
    rep = LawReport()

    d3 = h.delta.reshape(n, n, n)  # d3[a,b,i]: coefficient of e_a⊗e_b in Δ(e_i)
    lhs = npmod(np.einsum("Kx,ijx->Kij", h.delta, alg.mul), p)
    rhs = npmod(np.einsum("abi,cdj,acr,bds->rsij", d3, d3, alg.mul, alg.mul), p).reshape(n * n, n, n)
    unit_ok = (matmul(h.delta, alg.unit, p) == np.kron(alg.unit, alg.unit) % p).all()
    _compare(rep, "coproduct_algebra_hom", lhs, rhs, extra_ok=bool(unit_ok))

    lhs = npmod(np.einsum("x,ijx->ij", h.counit[0], alg.mul), p)
    rhs = npmod(np.outer(h.counit[0], h.counit[0]), p)
    eps_unit = int(matmul(h.counit, alg.unit, p)[0]) == 1
    _compare(rep, "counit_algebra_hom", lhs, rhs, extra_ok=eps_unit)

    lhs = npmod(np.einsum("Kx,ijx->Kij", h.antipode, alg.mul), p)
    rhs = npmod(np.einsum("ai,bj,abK->Kij", h.antipode, h.antipode, alg.mul), p)
    s_unit = (matmul(h.antipode, alg.unit, p) == alg.unit).all()
    _compare(rep, "antipode_algebra_hom", lhs, rhs, extra_ok=bool(s_unit))

    left = matmul(np.kron(h.delta, eye), h.delta, p)
    right = matmul(np.kron(eye, h.delta), h.delta, p)
    _compare(rep, "coassociativity", left, right)

    lhs = matmul(np.kron(h.counit, eye), h.delta, p)
    rhs = matmul(np.kron(eye, h.counit), h.delta, p)
    _compare(rep, "counit_law", lhs, eye, extra_ok=bool((rhs == eye).all()))

    target = npmod(np.outer(alg.unit, h.counit[0]), p)
    lhs = matmul(alg.mulmat, matmul(np.kron(h.antipode, eye), h.delta, p), p)
    _compare(rep, "antipode_law", lhs, target)
    rhs = matmul(alg.mulmat, matmul(np.kron(eye, h.antipode), h.delta, p), p)
    _compare(rep, "antipode_law_right", rhs, target)

    _compare(rep, "antipode_involution", matmul(h.antipode, h.antipode, p), eye)

    tw = twist_matrix(n)
    lhs = matmul(h.delta, h.antipode, p)
    rhs = matmul(tw, matmul(np.kron(h.antipode, h.antipode), h.delta, p), p)
    _compare(rep, "antipode_anticohomomorphism", lhs, rhs)
    return rep


def _compare(rep: LawReport, name: str, a: np.ndarray, b: np.ndarray, extra_ok: bool = True) -> None:
    if extra_ok and a.shape == b.shape and (a == b).all():
        rep.add(name, True)
    elif not extra_ok:
        rep.add(name, False, ("unit/counit image mismatch",))
    else:
        idx = tuple(int(v) for v in np.argwhere(a != b)[0])
        rep.add(name, False, (idx, int(a[idx]), int(b[idx])))


@dataclass
class HopfIdealCheck:
    coproduct: CheckResult
    counit: CheckResult
    antipode: CheckResult

    @property
    def ok(self) -> bool:
        return self.coproduct.passed and self.counit.passed and self.antipode.passed

    def to_json(self) -> dict:
        return {
            "coproduct_containment": self.coproduct.to_json(),
            "counit_vanishes": self.counit.to_json(),
            "antipode_stability": self.antipode.to_json(),
        }


def is_hopf_ideal(h: HopfData, ideal: IdealSubspace) -> HopfIdealCheck:
    """Delta(I) in I⊗A + A⊗I, eps(I) = 0, S(I) in I, decided by echelon
    membership; each failing verdict carries the offending basis vector."""
    alg = h.algebra
    p = alg.field.p
    n = alg.dim
    if not ideal.is_absorbing():
        raise ValueError("subspace is not an ideal")
    eye = np.eye(n, dtype=np.int64)
    if ideal.dim:
        mixed = span_sum(np.kron(ideal.basis, eye), np.kron(eye, ideal.basis), p)
    else:
        mixed = np.zeros((0, n * n), dtype=np.int64)
    mixed_piv = rref(mixed, p)[1] if ideal.dim else []

    cop_w: tuple = ()
    eps_w: tuple = ()
    s_w: tuple = ()
    cop_ok = eps_ok = s_ok = True
    for v in ideal.basis:
        dv = matmul(h.delta, v, p)
        if cop_ok and not span_contains(mixed, mixed_piv, dv.reshape(1, -1), p):
            cop_ok, cop_w = False, (v.tolist(),)
        if eps_ok and int(matmul(h.counit, v, p)[0]) != 0:
            eps_ok, eps_w = False, (v.tolist(), int(matmul(h.counit, v, p)[0]))
        if s_ok and not ideal.contains_vector(matmul(h.antipode, v, p)):
            s_ok, s_w = False, (v.tolist(),)
    return HopfIdealCheck(
        CheckResult(cop_ok, cop_w), CheckResult(eps_ok, eps_w), CheckResult(s_ok, s_w)
    )


def hopf_quotient(h: HopfData, ideal: IdealSubspace) -> tuple[HopfData, LinMap]:
    """Induced Hopf structure on A/I for a verified Hopf ideal; asserts
    (pi⊗pi)∘Delta = Delta_quo∘pi and that the quotient passes verify_hopf."""
    check = is_hopf_ideal(h, ideal)
    if not check.ok:
        raise ValueError(f"not a Hopf ideal: {check.to_json()}")
    alg = h.algebra
    p = alg.field.p
    quo, pi = quotient_algebra(alg, ideal)
    lift = pi.section
    pp = np.kron(pi.mat, pi.mat)
    delta_q = matmul(matmul(pp, h.delta, p), lift, p)
    counit_q = matmul(h.counit, lift, p)
    antipode_q = matmul(pi.mat, matmul(h.antipode, lift, p), p)
    out = HopfData(quo, delta_q, counit_q, antipode_q, name=f"{h.name}/I" if h.name else None)
    if not (matmul(delta_q, pi.mat, p) == matmul(pp, h.delta, p)).all():
        raise RuntimeError("quotient coproduct does not commute with the projection")
    rep = verify_hopf(out)
    if not rep.ok:
        raise RuntimeError(f"quotient of a Hopf ideal failed verification: {rep.failures()}")
    out._verified = True
    return out, pi


def iterated_coproduct(h: HopfData) -> np.ndarray:
    """H = (Delta⊗id)∘Delta = (id⊗Delta)∘Delta, as an (n^3 x n) matrix."""
    p = h.algebra.field.p
    n = h.dim
    eye = np.eye(n, dtype=np.int64)
    left = matmul(np.kron(h.delta, eye), h.delta, p)
    right = matmul(np.kron(eye, h.delta), h.delta, p)
    if not (left == right).all():
        raise ValueError("coassociativity violation: iterated coproduct is ill-defined")
    return left


# ---------------------------------------------------------------------------
# Built-in families
# ---------------------------------------------------------------------------


def mu_hopf(p: int, n: int) -> HopfData:
    """Roots of unity: F_p[T]/(T^n - 1) with group-like T.

    n | p-1 gives the split case; other n are allowed and simply produce
    higher-degree spectrum points.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    field = PrimeField(p)
    modulus = FpPoly.make(field, [-1] + [0] * (n - 1) + [1]) if n > 1 else FpPoly.make(field, [-1, 1])
    alg = monogenic_algebra(field, modulus)
    d = alg.dim
    delta = np.zeros((d * d, d), dtype=np.int64)
    counit = np.zeros((1, d), dtype=np.int64)
    antipode = np.zeros((d, d), dtype=np.int64)
    for j in range(d):
        tj = alg.power(alg.generator, j)
        delta[:, j] = np.kron(tj, tj) % p
        counit[0, j] = 1
        antipode[:, j] = alg.power(alg.generator, j * (n - 1) % n if n > 1 else 0)
    descent = None
    if n > 1:
        spf = min(q for q in range(2, n + 1) if n % q == 0)
        dd = n // spf
        descent = FpPoly.make(field, [-1] + [0] * (dd - 1) + [1])
    return HopfData(alg, delta, counit, antipode, name=f"mu:{p}:{n}", descent_ideal_poly=descent)


def additive_etale_hopf(p: int, k: int) -> HopfData:
    """The etale additive family: F_p[T]/(T^(p^k) - T) with primitive T."""
    if k < 1:
        raise ValueError("k must be >= 1")
    field = PrimeField(p)
    n = p**k
    modulus = FpPoly.make(field, [0, -1] + [0] * (n - 2) + [1])
    alg = monogenic_algebra(field, modulus)
    delta = np.zeros((n * n, n), dtype=np.int64)
    counit = np.zeros((1, n), dtype=np.int64)
    antipode = np.zeros((n, n), dtype=np.int64)
    dt = (np.kron(alg.generator, alg.unit) + np.kron(alg.unit, alg.generator)) % p
    acc = np.kron(alg.unit, alg.unit) % p
    for j in range(n):
        delta[:, j] = acc
        counit[0, j] = 1 if j == 0 else 0
        antipode[:, j] = alg.power(npmod(-alg.generator, p), j)
        if j + 1 < n:
            acc = tensor_square_mul(alg, acc, dt)
    descent = None
    if k >= 2:
        m = p ** (k - 1)
        descent = FpPoly.make(field, [0, -1] + [0] * (m - 2) + [1])
    return HopfData(alg, delta, counit, antipode, name=f"addetale:{p}:{k}", descent_ideal_poly=descent)


def parse_builtin(spec: str) -> HopfData:
    """Parse "mu:p:n" / "addetale:p:k" algebra descriptors."""
    parts = spec.strip().split(":")
    if len(parts) != 3:
        raise ValueError(f"cannot parse algebra spec {spec!r}: expected kind:p:n")
    kind, ps, ns = parts
    try:
        p, n = int(ps), int(ns)
    except ValueError:
        raise ValueError(f"cannot parse algebra spec {spec!r}: p and n must be integers")
    if not is_prime(p) or p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if kind == "mu":
        return mu_hopf(p, n)
    if kind == "addetale":
        return additive_etale_hopf(p, n)
    raise ValueError(f"unknown builtin kind {kind!r} (expected mu or addetale)")


def descent_ideal(h: HopfData) -> IdealSubspace:
    """Canonical Hopf ideal used by the descent checks: the designated
    polynomial for builtins, the zero ideal otherwise."""
    if h.descent_ideal_poly is None:
        return IdealSubspace(h.algebra, np.zeros((0, h.dim), dtype=np.int64))
    return IdealSubspace.from_poly(h.algebra, h.descent_ideal_poly)

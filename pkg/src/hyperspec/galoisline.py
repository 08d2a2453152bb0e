"""Closed points of the affine line and the torus over F_p, with the
spectrum hyperoperation computed two independent ways.

The Galois-orbit engine adds (or multiplies) roots in a common splitting
field and collects minimal polynomials of the results. The definitional
engine works with the image of the coproduct generator in the residue-field
tensor product: its minimal polynomial generates the forced-zero ideal, and
candidate divisors are accepted unless their residues contain a rank-one
element. Agreement of the two engines on every pair is the checkable content
of the orbit description of these spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import lcm

import numpy as np

from .algkernel import monogenic_algebra, tensor_algebra
from .gfarith import (
    FpPoly,
    FqElem,
    PrimeField,
    factor,
    find_irreducible,
    fq_elements,
    irreducibles_up_to,
    minimal_polynomial,
    minpoly_over_fp,
)
from .linalg import batch_tensor_rank_class, enumerate_vectors, npmod

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"
LAWS = (ADDITIVE, MULTIPLICATIVE)


@dataclass(frozen=True)
class LinePoint:
    """A closed point: a monic irreducible polynomial. The multiplicative law
    lives on F_p[T, 1/T], so (T) is excluded there."""

    law: str
    poly: FpPoly

    def __post_init__(self) -> None:
        if self.law not in LAWS:
            raise ValueError(f"unknown law {self.law!r}")
        if not self.poly.is_monic() or self.poly.degree < 1:
            raise ValueError("line points are monic irreducible polynomials")
        if self.law == MULTIPLICATIVE and self.poly.coeffs[0] == 0:
            raise ValueError("(T) is invertible on the torus and is not a point there")

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def label(self) -> str:
        return f"({self.poly})"

    def sort_key(self) -> tuple:
        return (self.poly.degree, self.poly.coeffs)

    def __repr__(self) -> str:
        return f"LinePoint{self.label}"


def line_points(p: int, law: str, max_degree: int) -> list[LinePoint]:
    pts = []
    for q in irreducibles_up_to(p, max_degree):
        if law == MULTIPLICATIVE and q.coeffs[0] == 0:
            continue
        pts.append(LinePoint(law, q))
    return pts


def line_identity(p: int, law: str) -> LinePoint:
    field = PrimeField(p)
    if law == ADDITIVE:
        return LinePoint(law, FpPoly.x(field))
    return LinePoint(law, FpPoly.make(field, (-1, 1)))


def line_antipode(pt: LinePoint) -> LinePoint:
    """Roots a -> -a (additive) or a -> 1/a (multiplicative), normalized monic."""
    field = pt.poly.field
    if pt.law == ADDITIVE:
        minus_t = FpPoly.make(field, (0, -1))
        return LinePoint(pt.law, pt.poly.compose(minus_t).monic())
    return LinePoint(pt.law, FpPoly.make(field, tuple(reversed(pt.poly.coeffs))).monic())


@lru_cache(maxsize=None)
def _root_of(poly: FpPoly, ext_degree: int) -> FqElem:
    """First root of an irreducible poly inside F_{p^ext_degree} (its degree
    must divide ext_degree), by deterministic scan."""
    modulus = find_irreducible(poly.field.p, ext_degree)
    for x in fq_elements(modulus):
        acc = FqElem.from_coeffs(modulus, ())
        for c in reversed(poly.coeffs):
            acc = acc * x + FqElem.from_coeffs(modulus, (c,))
        if acc.is_zero():
            return x
    raise ValueError(f"{poly} has no root in degree-{ext_degree} extension")


@lru_cache(maxsize=None)
def galois_hyperop(p: int, law: str, f: LinePoint, g: LinePoint) -> tuple[LinePoint, ...]:
    """Orbit-model hyperoperation: fix a root of f, run over the Frobenius
    conjugates of a root of g, and collect minimal polynomials of the sums
    (additive) or products (multiplicative)."""
    m = lcm(f.degree, g.degree)
    alpha = _root_of(f.poly, m)
    beta = _root_of(g.poly, m)
    out = set()
    conj = beta
    for _ in range(g.degree):
        val = alpha + conj if law == ADDITIVE else alpha * conj
        out.add(minpoly_over_fp(val))
        conj = conj.frobenius()
    pts = []
    for q in out:
        if law == MULTIPLICATIVE and q.coeffs[0] == 0:
            # alpha * conj = 0 is impossible for torus points; kept as a guard
            continue
        pts.append(LinePoint(law, q))
    return tuple(sorted(pts, key=LinePoint.sort_key))


@lru_cache(maxsize=None)
def definitional_hyperop(p: int, law: str, f: LinePoint, g: LinePoint) -> tuple[LinePoint, ...]:
    """Membership-condition hyperoperation, computed in the residue tensor:
    the forced-zero ideal is (minimal polynomial of the coproduct-generator
    image s); an irreducible divisor pi survives iff no element of
    (pi)/(g_P) has a rank-one image."""
    field = PrimeField(p)
    kf = monogenic_algebra(field, f.poly)
    kg = monogenic_algebra(field, g.poly)
    ten = tensor_algebra(kf, kg)
    tf = np.kron(kf.generator, kg.unit) % p
    tg = np.kron(kf.unit, kg.generator) % p
    s = (tf + tg) % p if law == ADDITIVE else ten.mul_vec(tf, tg)
    g_p = minimal_polynomial(s, ten)
    if g_p.degree > f.degree * g.degree:
        raise RuntimeError("forced-zero generator exceeds the degree bound")
    dgp = g_p.degree

    s_pows = np.zeros((dgp, kf.dim * kg.dim), dtype=np.int64)
    acc = ten.unit.copy()
    for k in range(dgp):
        s_pows[k] = acc
        acc = ten.mul_vec(acc, s)

    accepted = []
    for pi, _mult in factor(g_p):
        if law == MULTIPLICATIVE and pi.coeffs[0] == 0:
            continue
        free = dgp - pi.degree
        if free == 0:
            # (pi)/(g_P) = {0}: nothing can be forced to one
            accepted.append(LinePoint(law, pi))
            continue
        conv = np.zeros((dgp, free), dtype=np.int64)
        for j in range(free):
            for i, c in enumerate(pi.coeffs):
                conv[i + j, j] = c
        u = enumerate_vectors(p, free)
        xs = npmod(u @ conv.T, p)
        images = npmod(xs @ s_pows, p).reshape(-1, kf.dim, kg.dim)
        cls = batch_tensor_rank_class(images, p)
        if not (cls == 1).any():
            accepted.append(LinePoint(law, pi))
    return tuple(sorted(accepted, key=LinePoint.sort_key))


@dataclass
class PairRecord:
    f: LinePoint
    g: LinePoint
    galois: tuple[LinePoint, ...]
    definitional: tuple[LinePoint, ...]

    @property
    def agree(self) -> bool:
        return self.galois == self.definitional

    def to_json(self) -> dict:
        return {
            "f": self.f.poly.to_list(),
            "g": self.g.poly.to_list(),
            "galois": [q.poly.to_list() for q in self.galois],
            "definitional": [q.poly.to_list() for q in self.definitional],
            "agree": self.agree,
        }


@dataclass
class CrosscheckReport:
    p: int
    law: str
    max_degree: int
    pairs: list[PairRecord]
    identity_ok: bool
    antipode_ok: bool
    reversibility_ok: bool
    commutativity_ok: bool
    associativity_checked: int
    associativity_skipped: int
    associativity_ok: bool
    degree_bound_ok: bool

    @property
    def agree_all(self) -> bool:
        return all(r.agree for r in self.pairs)

    @property
    def ok(self) -> bool:
        return (
            self.agree_all
            and self.identity_ok
            and self.antipode_ok
            and self.reversibility_ok
            and self.commutativity_ok
            and self.associativity_ok
            and self.degree_bound_ok
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "law": self.law,
            "max_degree": self.max_degree,
            "pairs": [r.to_json() for r in self.pairs],
            "laws": {
                "identity": self.identity_ok,
                "antipode_inverse": self.antipode_ok,
                "reversibility": self.reversibility_ok,
                "commutativity": self.commutativity_ok,
                "associativity": {
                    "checked": self.associativity_checked,
                    "skipped": self.associativity_skipped,
                    "pass": self.associativity_ok,
                },
            },
            "degree_bound": self.degree_bound_ok,
            "agree": self.ok,
        }


def crosscheck(p: int, law: str, max_degree: int) -> CrosscheckReport:
    """Run both engines on every pair of points of degree <= max_degree and
    check the hypergroup laws on the fragment. Associativity triples whose
    intermediate or final computations would need degrees beyond
    max_degree^2 are skipped and counted, never silently dropped."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    pts = line_points(p, law, max_degree)
    e = line_identity(p, law)

    pairs = []
    degree_ok = True
    for f, g in product(pts, repeat=2):
        gal = galois_hyperop(p, law, f, g)
        de = definitional_hyperop(p, law, f, g)
        pairs.append(PairRecord(f, g, gal, de))
        if any(lcm(f.degree, g.degree) % q.degree for q in gal):
            degree_ok = False

    identity_ok = all(
        galois_hyperop(p, law, e, f) == (f,) and galois_hyperop(p, law, f, e) == (f,) for f in pts
    )

    antipode_ok = True
    for f in pts:
        ft = line_antipode(f)
        if e not in galois_hyperop(p, law, f, ft) or e not in galois_hyperop(p, law, ft, f):
            antipode_ok = False
            break

    reversibility_ok = True
    for f, g in product(pts, repeat=2):
        fwd = galois_hyperop(p, law, f, g)
        rev = galois_hyperop(p, law, line_antipode(g), line_antipode(f))
        if tuple(sorted((line_antipode(x) for x in fwd), key=LinePoint.sort_key)) != rev:
            reversibility_ok = False
            break

    commutativity_ok = all(
        galois_hyperop(p, law, f, g) == galois_hyperop(p, law, g, f) for f, g in product(pts, repeat=2)
    )

    bound = max_degree * max_degree
    checked = skipped = 0
    associativity_ok = True
    for f, g, k in product(pts, repeat=3):
        fg = galois_hyperop(p, law, f, g)
        gk = galois_hyperop(p, law, g, k)
        needed = [lcm(s.degree, k.degree) for s in fg] + [lcm(f.degree, s.degree) for s in gk]
        if any(d > bound for d in needed):
            skipped += 1
            continue
        left = set()
        for s in fg:
            left.update(galois_hyperop(p, law, s, k))
        right = set()
        for s in gk:
            right.update(galois_hyperop(p, law, f, s))
        checked += 1
        if left != right:
            associativity_ok = False
            break

    return CrosscheckReport(
        p,
        law,
        max_degree,
        pairs,
        identity_ok,
        antipode_ok,
        reversibility_ok,
        commutativity_ok,
        checked,
        skipped,
        associativity_ok,
        degree_ok,
    )

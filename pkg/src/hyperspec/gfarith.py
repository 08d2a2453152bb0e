"""Exact arithmetic over F_p (p an odd prime >= 3) and F_{p^k}.

Univariate polynomials are coefficient tuples, lowest degree first, always
normalized (no trailing zeros); the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .linalg import solve


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The scalar field F_p. Only odd primes are accepted: the forced-value
    analysis divides by 2 and every hyperfield realization needs |k| >= 3."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p < 3:
            raise ValueError("characteristic 2 is rejected: the base field must have at least 3 elements")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return pow(a, self.p - 2, self.p)


def _normalize(coeffs, p: int) -> tuple[int, ...]:
    c = [int(x) % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class FpPoly:
    """Univariate polynomial over F_p, coefficients lowest degree first."""

    field: PrimeField
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: PrimeField, coeffs) -> "FpPoly":
        return FpPoly(field, _normalize(coeffs, field.p))

    @staticmethod
    def zero(field: PrimeField) -> "FpPoly":
        return FpPoly(field, ())

    @staticmethod
    def one(field: PrimeField) -> "FpPoly":
        return FpPoly(field, (1,))

    @staticmethod
    def x(field: PrimeField) -> "FpPoly":
        return FpPoly(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "FpPoly") -> "FpPoly":
        p = self.field.p
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return FpPoly.make(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __neg__(self) -> "FpPoly":
        return FpPoly.make(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        if self.is_zero() or other.is_zero():
            return FpPoly.zero(self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return FpPoly.make(self.field, out)

    def scale(self, c: int) -> "FpPoly":
        return FpPoly.make(self.field, [c * a for a in self.coeffs])

    def divmod(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = self.field.inv(other.coeffs[-1])
        quo = [0] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] * inv_lead % p
            quo[k] = f
            for i, b in enumerate(other.coeffs):
                rem[k + i] = (rem[k + i] - f * b) % p
        return FpPoly.make(self.field, quo), FpPoly.make(self.field, rem)

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[0]

    def monic(self) -> "FpPoly":
        """Canonical representative of the associate class."""
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "FpPoly") -> "FpPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def pow_mod(self, e: int, modulus: "FpPoly") -> "FpPoly":
        result = FpPoly.one(self.field)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def eval(self, a: int) -> int:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def compose(self, other: "FpPoly") -> "FpPoly":
        acc = FpPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + FpPoly.make(self.field, (c,))
        return acc

    def shift(self, k: int) -> "FpPoly":
        if self.is_zero():
            return self
        return FpPoly(self.field, (0,) * k + self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        p = self.field.p
        if self.is_zero():
            return "0"
        if self.degree == 1 and self.coeffs[1] == 1:
            root = (-self.coeffs[0]) % p
            return "T" if root == 0 else f"T-{root}"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                var = "T" if k == 1 else f"T^{k}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)


def parse_poly(text: str, field: PrimeField) -> FpPoly:
    """Parse strings like "T^2+1", "T-1", "(T^3+T)", "2T+1"."""
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial string")
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign = -1
            term = term[1:]
        if "T" in term:
            head, _, tail = term.partition("T")
            c = int(head) if head else 1
            k = int(tail[1:]) if tail.startswith("^") else (1 if not tail else None)
            if k is None:
                raise ValueError(f"cannot parse term in {text!r}")
        else:
            c = int(term)
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c % field.p
    return FpPoly.make(field, out)


def monic_polys(field: PrimeField, degree: int) -> Iterator[FpPoly]:
    """All monic polynomials of the exact degree, in lexicographic order."""
    for lower in product(range(field.p), repeat=degree):
        yield FpPoly(field, tuple(lower) + (1,))


def is_irreducible(poly: FpPoly) -> bool:
    """Trial division by every monic polynomial of degree in [1, deg/2]."""
    if poly.is_zero() or poly.degree < 1:
        raise ValueError("irreducibility is only defined for nonconstant polynomials")
    for d in range(1, poly.degree // 2 + 1):
        for q in monic_polys(poly.field, d):
            if (poly % q).is_zero():
                return False
    return True


def factor(poly: FpPoly, field: PrimeField | None = None) -> list[tuple[FpPoly, int]]:
    """Factor into monic irreducibles by exhaustive trial division.

    Returns (factor, multiplicity) pairs sorted by (degree, coefficients);
    the product of the factors times the leading coefficient equals poly.
    """
    if poly.is_zero():
        raise ValueError("cannot factor zero")
    field = field or poly.field
    rem = poly.monic()
    out: list[tuple[FpPoly, int]] = []
    d = 1
    while rem.degree >= 1:
        if d > rem.degree // 2:
            out.append((rem, 1))
            break
        found = None
        for q in monic_polys(field, d):
            if (rem % q).is_zero():
                found = q
                break
        if found is None:
            d += 1
            continue
        mult = 0
        while (rem % found).is_zero():
            rem = rem // found
            mult += 1
        out.append((found, mult))
    return sorted(out, key=lambda fm: (fm[0].degree, fm[0].coeffs))


@lru_cache(maxsize=None)
def irreducibles_up_to(p: int, max_degree: int) -> tuple[FpPoly, ...]:
    field = PrimeField(p)
    out = []
    for d in range(1, max_degree + 1):
        out.extend(q for q in monic_polys(field, d) if is_irreducible(q))
    return tuple(out)


@lru_cache(maxsize=None)
def find_irreducible(p: int, degree: int) -> FpPoly:
    """Deterministic modulus for F_{p^degree}: first monic irreducible in lex order."""
    field = PrimeField(p)
    for q in monic_polys(field, degree):
        if is_irreducible(q):
            return q
    raise RuntimeError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FqElem:
    """Element of F_{p^k} = F_p[T]/(modulus), modulus monic irreducible."""

    modulus: FpPoly
    residue: FpPoly

    @staticmethod
    def make(modulus: FpPoly, residue: FpPoly) -> "FqElem":
        return FqElem(modulus, residue % modulus)

    @staticmethod
    def from_coeffs(modulus: FpPoly, coeffs) -> "FqElem":
        return FqElem.make(modulus, FpPoly.make(modulus.field, coeffs))

    @property
    def field(self) -> PrimeField:
        return self.modulus.field

    def __add__(self, other: "FqElem") -> "FqElem":
        return FqElem(self.modulus, self.residue + other.residue)

    def __sub__(self, other: "FqElem") -> "FqElem":
        return FqElem(self.modulus, self.residue - other.residue)

    def __neg__(self) -> "FqElem":
        return FqElem(self.modulus, -self.residue)

    def __mul__(self, other: "FqElem") -> "FqElem":
        return FqElem(self.modulus, (self.residue * other.residue) % self.modulus)

    def __pow__(self, e: int) -> "FqElem":
        if e < 0:
            return self.inv() ** (-e)
        return FqElem(self.modulus, self.residue.pow_mod(e, self.modulus))

    def inv(self) -> "FqElem":
        if self.residue.is_zero():
            raise ZeroDivisionError("division by zero in F_q")
        q = self.field.p ** self.modulus.degree
        return self ** (q - 2)

    def frobenius(self) -> "FqElem":
        return self ** self.field.p

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def coeff_vector(self) -> list[int]:
        k = self.modulus.degree
        return list(self.residue.coeffs) + [0] * (k - len(self.residue.coeffs))


def fq_elements(modulus: FpPoly) -> Iterator[FqElem]:
    p = modulus.field.p
    for coeffs in product(range(p), repeat=modulus.degree):
        yield FqElem(modulus, FpPoly.make(modulus.field, coeffs))


def poly_roots_in_fq(poly: FpPoly, modulus: FpPoly) -> list[FqElem]:
    """All roots of poly in F_{p^k}, by exhaustive scan (desk scale)."""
    zero = FqElem.make(modulus, FpPoly.zero(modulus.field))
    roots = []
    for x in fq_elements(modulus):
        acc = zero
        for c in reversed(poly.coeffs):
            acc = acc * x + FqElem.from_coeffs(modulus, (c,))
        if acc.is_zero():
            roots.append(x)
    return roots


def minpoly_over_fp(elem: FqElem) -> FpPoly:
    """Minimal polynomial of an F_{p^k} element over F_p."""
    field = elem.field
    k = elem.modulus.degree
    powers = [FqElem.from_coeffs(elem.modulus, (1,))]
    for _ in range(k):
        powers.append(powers[-1] * elem)
    rows = np.array([e.coeff_vector() for e in powers], dtype=np.int64)
    for d in range(1, k + 1):
        # monic dependence T^d = -(c_0 + ... + c_{d-1} T^{d-1})
        sol = solve(rows[:d].T, rows[d], field.p)
        if sol is not None:
            coeffs = [(-int(c)) % field.p for c in sol] + [1]
            return FpPoly.make(field, coeffs)
    raise RuntimeError("unreachable: element of F_{p^k} is algebraic of degree <= k")


def minimal_polynomial(elem, algebra) -> FpPoly:
    """Minimal polynomial of an element of a finite-dimensional commutative
    F_p-algebra, by exact kernel computation on its powers.

    `algebra` provides dim, field, unit, and mul_vec; `elem` is a coordinate
    vector in the algebra basis.
    """
    field = algebra.field
    v = np.asarray(elem, dtype=np.int64) % field.p
    powers = [np.asarray(algebra.unit, dtype=np.int64).copy()]
    for _ in range(algebra.dim):
        powers.append(algebra.mul_vec(powers[-1], v))
    rows = np.array(powers, dtype=np.int64)
    for d in range(1, algebra.dim + 1):
        sol = solve(rows[:d].T, rows[d], field.p)
        if sol is not None:
            coeffs = [(-int(c)) % field.p for c in sol] + [1]
            return FpPoly.make(field, coeffs)
    raise RuntimeError("unreachable: finite-dimensional algebra elements are algebraic")

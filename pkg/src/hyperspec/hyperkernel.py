"""Finite hyperstructures as explicit tables.

A hyperoperation maps each ordered pair of carrier elements to a nonempty
subset of the carrier. Tables are immutable once built; every law checker
returns a LawReport with a concrete witness tuple for each failing axiom
instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

import numpy as np


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    witness: tuple = ()
    report_only: bool = False

    def to_json(self) -> dict:
        out: dict = {"pass": self.passed, "witness": list(self.witness)}
        if self.report_only:
            out["report_only"] = True
        return out


@dataclass
class LawReport:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    def add(self, name: str, passed: bool, witness: tuple = (), report_only: bool = False) -> None:
        self.checks[name] = CheckResult(bool(passed), witness, report_only)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values() if not c.report_only)

    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if not c.passed and not c.report_only]

    def to_json(self) -> dict:
        return {name: c.to_json() for name, c in self.checks.items()}


class HyperTable:
    """A finite hyperoperation: carrier labels plus a total map
    carrier x carrier -> nonempty subset, stored as a boolean cube."""

    def __init__(self, carrier: Iterable[str], op: Mapping[tuple[str, str], Iterable[str]]):
        self.carrier = tuple(str(c) for c in carrier)
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier labels must be distinct")
        n = len(self.carrier)
        self.index = {c: i for i, c in enumerate(self.carrier)}
        cube = np.zeros((n, n, n), dtype=bool)
        for a, b in product(self.carrier, repeat=2):
            try:
                vals = op[(a, b)]
            except KeyError:
                raise ValueError(f"hyperoperation is not total: missing ({a},{b})")
            vals = list(vals)
            if not vals:
                raise ValueError(f"empty value set at ({a},{b}): hyperoperations return nonempty subsets")
            for v in vals:
                cube[self.index[a], self.index[b], self.index[str(v)]] = True
        self.cube = cube
        self.cube.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.carrier)

    def op(self, a: str, b: str) -> frozenset[str]:
        row = self.cube[self.index[a], self.index[b]]
        return frozenset(self.carrier[i] for i in np.nonzero(row)[0])

    def is_single_valued(self) -> bool:
        return bool((self.cube.sum(axis=2) == 1).all())

    def to_json(self) -> dict:
        return {
            "carrier": list(self.carrier),
            "op": {
                f"{a},{b}": sorted(self.op(a, b), key=self.index.get)
                for a in self.carrier
                for b in self.carrier
            },
        }

    @staticmethod
    def from_json(doc: dict) -> "HyperTable":
        carrier = doc["carrier"]
        op = {}
        for key, vals in doc["op"].items():
            a, _, b = key.partition(",")
            op[(a, b)] = vals
        return HyperTable(carrier, op)


def extend_to_subsets(t: HyperTable, a_set: Iterable[str], b_set: Iterable[str]) -> frozenset[str]:
    """A*B = union of a*b over a in A, b in B."""
    a_set, b_set = list(a_set), list(b_set)
    if not a_set or not b_set:
        raise ValueError("subset extension requires nonempty subsets")
    ai = [t.index[a] for a in a_set]
    bi = [t.index[b] for b in b_set]
    mask = t.cube[np.ix_(ai, bi)].any(axis=(0, 1))
    return frozenset(t.carrier[i] for i in np.nonzero(mask)[0])


def _assoc_sides(cube: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    u = cube.astype(np.uint16)
    left = np.einsum("abx,xcd->abcd", u, u) > 0
    right = np.einsum("bcx,axd->abcd", u, u) > 0
    return left, right


def _identities(cube: np.ndarray) -> list[int]:
    n = cube.shape[0]
    eye = np.eye(n, dtype=bool)
    out = []
    for e in range(n):
        if (cube[e] == eye).all() and (cube[:, e, :] == eye).all():
            out.append(e)
    return out


def check_hypergroup(t: HyperTable, mode: str = "strong") -> LawReport:
    """Check hypergroup axioms exhaustively.

    mode "strong": associativity, unique two-sided identity, unique inverses.
    mode "marty": associativity plus a*H = H*a = H.
    mode "canonical": strong plus commutativity and reversibility.
    """
    if mode not in ("strong", "marty", "canonical"):
        raise ValueError(f"unknown mode {mode!r}")
    rep = LawReport()
    cube = t.cube
    n = t.size
    names = t.carrier

    left, right = _assoc_sides(cube)
    if (left == right).all():
        rep.add("associativity", True)
    else:
        a, b, c = (int(v) for v in np.argwhere((left != right).any(axis=3))[0])
        rep.add(
            "associativity",
            False,
            (
                names[a],
                names[b],
                names[c],
                sorted(names[i] for i in np.nonzero(left[a, b, c])[0]),
                sorted(names[i] for i in np.nonzero(right[a, b, c])[0]),
            ),
        )

    if mode == "marty":
        rows_ok = cube.any(axis=1).all()
        cols_ok = cube.any(axis=0).all()
        if rows_ok and cols_ok:
            rep.add("reproducibility", True)
        else:
            bad = np.argwhere(~cube.any(axis=1).all(axis=1))
            a = int(bad[0][0]) if bad.size else int(np.argwhere(~cube.any(axis=0).all(axis=1))[0][0])
            rep.add("reproducibility", False, (names[a],))
        return rep

    ids = _identities(cube)
    if len(ids) == 1:
        rep.add("identity_unique", True)
        e = ids[0]
    else:
        rep.add("identity_unique", False, (sorted(names[i] for i in ids),))
        e = None

    inv: dict[int, int] | None = None
    if e is None:
        rep.add("inverses_unique", False, ("no unique identity",))
    else:
        bad = None
        inv = {}
        for a in range(n):
            cands = np.nonzero(cube[a, :, e] & cube[:, a, e])[0]
            if cands.size != 1:
                bad = (names[a], sorted(names[int(i)] for i in cands))
                break
            inv[a] = int(cands[0])
        if bad is None:
            rep.add("inverses_unique", True)
        else:
            rep.add("inverses_unique", False, bad)
            inv = None

    if mode == "canonical":
        if (cube == cube.transpose(1, 0, 2)).all():
            rep.add("commutativity", True)
        else:
            a, b = (int(v) for v in np.argwhere((cube != cube.transpose(1, 0, 2)).any(axis=2))[0])
            rep.add("commutativity", False, (names[a], names[b]))
        if e is None or inv is None:
            rep.add("reversibility", False, ("needs identity and inverses",))
        else:
            triples = np.argwhere(cube)
            aa, bb, cc = triples[:, 0], triples[:, 1], triples[:, 2]
            inv_arr = np.array([inv[i] for i in range(n)])
            ok1 = cube[cc, inv_arr[aa], bb]
            ok2 = cube[cc, inv_arr[bb], aa]
            good = ok1 & ok2
            if good.all():
                rep.add("reversibility", True)
            else:
                k = int(np.nonzero(~good)[0][0])
                rep.add("reversibility", False, (names[int(aa[k])], names[int(bb[k])], names[int(cc[k])]))
    return rep


class HyperRingTable:
    """Hyperaddition table plus a single-valued commutative multiplication."""

    def __init__(
        self,
        add: HyperTable,
        mul: Mapping[tuple[str, str], str],
        zero: str,
        one: str,
    ):
        self.add = add
        self.carrier = add.carrier
        self.index = add.index
        n = add.size
        m = np.zeros((n, n), dtype=np.int64)
        for a, b in product(self.carrier, repeat=2):
            m[self.index[a], self.index[b]] = self.index[str(mul[(a, b)])]
        self.mul = m
        self.mul.setflags(write=False)
        self.zero = str(zero)
        self.one = str(one)
        if self.zero not in self.index or self.one not in self.index:
            raise ValueError("zero/one must be carrier elements")

    def mul_of(self, a: str, b: str) -> str:
        return self.carrier[self.mul[self.index[a], self.index[b]]]

    def to_json(self) -> dict:
        doc = self.add.to_json()
        doc["mul"] = {f"{a},{b}": self.mul_of(a, b) for a in self.carrier for b in self.carrier}
        doc["zero"] = self.zero
        doc["one"] = self.one
        return doc

    @staticmethod
    def from_json(doc: dict) -> "HyperRingTable":
        add = HyperTable(doc["carrier"], {tuple(k.split(",")): v for k, v in doc["op"].items()})
        mul = {tuple(k.split(",")): v for k, v in doc["mul"].items()}
        return HyperRingTable(add, mul, doc["zero"], doc["one"])


def check_hyperring(r: HyperRingTable) -> LawReport:
    """Axioms: canonical hypergroup under +, commutative monoid under *,
    distributivity, zero absorbs, zero != one; plus a report-only hyperfield flag."""
    rep = LawReport()
    names = r.carrier
    n = len(names)
    zero, one = r.index[r.zero], r.index[r.one]

    addrep = check_hypergroup(r.add, "canonical")
    add_ok = addrep.ok
    ids = _identities(r.add.cube)
    if add_ok and ids != [zero]:
        add_ok = False
    rep.add(
        "additive_canonical_hypergroup",
        add_ok,
        () if add_ok else (addrep.failures() or ["identity differs from declared zero"],),
    )

    mu = r.mul
    comm = (mu == mu.T).all()
    assoc_cube_l = mu[mu, :]
    assoc_cube_r = mu[:, mu]
    assoc = (assoc_cube_l == assoc_cube_r).all()
    unital = (mu[one] == np.arange(n)).all() and (mu[:, one] == np.arange(n)).all()
    if comm and assoc and unital:
        rep.add("multiplicative_monoid", True)
    elif not comm:
        a, b = (int(v) for v in np.argwhere(mu != mu.T)[0])
        rep.add("multiplicative_monoid", False, ("commutativity", names[a], names[b]))
    elif not assoc:
        a, b, c = (int(v) for v in np.argwhere(assoc_cube_l != assoc_cube_r)[0])
        rep.add("multiplicative_monoid", False, ("associativity", names[a], names[b], names[c]))
    else:
        a = int(np.argwhere(mu[one] != np.arange(n))[0][0]) if (mu[one] != np.arange(n)).any() else int(
            np.argwhere(mu[:, one] != np.arange(n))[0][0]
        )
        rep.add("multiplicative_monoid", False, ("identity", names[a]))

    addc = r.add.cube
    u = addc.astype(np.uint16)
    monehot = np.zeros((n, n, n), dtype=np.uint16)
    ar = np.arange(n)
    for a in range(n):
        monehot[a, ar, mu[a]] = 1
    # a*(b+c) vs a*b + a*c
    lhs_left = np.einsum("bcx,axd->abcd", u, monehot) > 0
    rhs_left = addc[np.broadcast_to(mu[:, :, None], (n, n, n)), np.broadcast_to(mu[:, None, :], (n, n, n))]
    # (a+b)*c vs a*c + b*c
    lhs_right = np.einsum("abx,xcd->abcd", u, monehot) > 0
    rhs_right = addc[np.broadcast_to(mu[:, None, :], (n, n, n)), np.broadcast_to(mu[None, :, :], (n, n, n))]
    witness: tuple = ()
    dist_ok = bool((lhs_left == rhs_left).all())
    if not dist_ok:
        a, b, c = (int(v) for v in np.argwhere((lhs_left != rhs_left).any(axis=3))[0])
        witness = (names[a], names[b], names[c], "left")
    elif not (lhs_right == rhs_right).all():
        dist_ok = False
        a, b, c = (int(v) for v in np.argwhere((lhs_right != rhs_right).any(axis=3))[0])
        witness = (names[a], names[b], names[c], "right")
    rep.add("distributivity", dist_ok, witness)

    absorb = (mu[zero] == zero).all() and (mu[:, zero] == zero).all()
    rep.add("zero_absorbs", bool(absorb), () if absorb else (r.zero,))
    rep.add("zero_not_one", zero != one, () if zero != one else (r.zero,))

    nz = [i for i in range(n) if i != zero]
    closed = all(mu[a, b] != zero for a in nz for b in nz)
    invertible = all(any(mu[a, b] == one for b in nz) for a in nz)
    rep.add("hyperfield", bool(closed and invertible and rep.checks["multiplicative_monoid"].passed), (), report_only=True)
    return rep


def check_hyperring_hom(
    f: Mapping[str, str], src: HyperRingTable, dst: HyperRingTable
) -> LawReport:
    """Hyperring homomorphism check: f(a+b) subset of f(a)+f(b), monoid map on
    multiplication, zero and one preserved. Adds a report-only "strict" entry
    recording whether the containment is an equality everywhere."""
    rep = LawReport()
    for a in src.carrier:
        if a not in f:
            raise ValueError(f"map is not total: missing {a}")
    rep.add("zero_preserved", f[src.zero] == dst.zero, (f[src.zero],))
    rep.add("one_preserved", f[src.one] == dst.one, (f[src.one],))

    mul_ok: tuple | None = None
    for a, b in product(src.carrier, repeat=2):
        if f[src.mul_of(a, b)] != dst.mul_of(f[a], f[b]):
            mul_ok = (a, b, f[src.mul_of(a, b)], dst.mul_of(f[a], f[b]))
            break
    rep.add("mul_monoid_hom", mul_ok is None, mul_ok or ())

    contain: tuple | None = None
    strict = True
    for a, b in product(src.carrier, repeat=2):
        image = frozenset(f[c] for c in src.add.op(a, b))
        target = dst.add.op(f[a], f[b])
        if not image <= target:
            contain = (a, b, sorted(image), sorted(target))
            break
        if image != target:
            strict = False
    rep.add("hyperadd_hom", contain is None, contain or ())
    rep.add("strict", contain is None and strict, (), report_only=True)
    return rep


# ---------------------------------------------------------------------------
# Table-based finite commutative rings (the raw material for quotient
# hyperrings). Char 2 fields are legitimate here: the standing hypothesis is
# |k| >= 3, about size, not characteristic.
# ---------------------------------------------------------------------------


class FiniteRing:
    def __init__(self, names: Iterable[str], add: np.ndarray, mul: np.ndarray, zero: int, one: int):
        self.names = tuple(names)
        self.addt = np.asarray(add, dtype=np.int64)
        self.mult = np.asarray(mul, dtype=np.int64)
        self.zero = zero
        self.one = one
        self._validate()

    @property
    def size(self) -> int:
        return len(self.names)

    def _validate(self) -> None:
        n = self.size
        ar = np.arange(n)
        a, m = self.addt, self.mult
        if not (a == a.T).all() or not (m == m.T).all():
            raise ValueError("ring tables must be commutative")
        if not (a[a, :] == a[:, a]).all():
            raise ValueError("addition is not associative")
        if not (m[m, :] == m[:, m]).all():
            raise ValueError("multiplication is not associative")
        if not (a[self.zero] == ar).all() or not (m[self.one] == ar).all():
            raise ValueError("zero/one are not identities")
        if not all((a[i] == self.zero).any() for i in range(n)):
            raise ValueError("additive inverses missing")
        lhs = m[ar[:, None, None], a[None, :, :]]
        rhs = a[m[:, :, None], m[:, None, :]]
        if not (lhs == rhs).all():
            raise ValueError("distributivity fails")

    def units(self) -> list[int]:
        return [i for i in range(self.size) if (self.mult[i] == self.one).any()]


def zmod_ring(n: int) -> FiniteRing:
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return FiniteRing([str(i) for i in range(n)], add, mul, 0, 1)


def _small_irreducible(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e over Z_p, as a coefficient tuple
    (lowest first, length e+1). Plain int arithmetic: works for p = 2 too."""

    def poly_mod(num: list[int], den: tuple[int, ...]) -> list[int]:
        num = [c % p for c in num]
        dd = len(den) - 1
        inv = pow(den[-1], -1, p)
        while len(num) - 1 >= dd and any(num):
            while num and num[-1] == 0:
                num.pop()
            if len(num) - 1 < dd:
                break
            f = num[-1] * inv % p
            k = len(num) - 1 - dd
            for i, c in enumerate(den):
                num[k + i] = (num[k + i] - f * c) % p
        return num

    def irreducible(cand: tuple[int, ...]) -> bool:
        deg = len(cand) - 1
        for d in range(1, deg // 2 + 1):
            for lower in product(range(p), repeat=d):
                den = tuple(lower) + (1,)
                if not any(poly_mod(list(cand), den)):
                    return False
        return True

    for lower in product(range(p), repeat=e):
        cand = tuple(lower) + (1,)
        if irreducible(cand):
            return cand
    raise RuntimeError("unreachable")


def field_ring(q: int) -> FiniteRing:
    """The finite field F_q as explicit tables, q = p^e any prime power >= 2."""
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    if p is None or not is_prime_int(p):
        raise ValueError(f"{q} is not a prime power")
    e = 0
    qq = q
    while qq % p == 0:
        qq //= p
        e += 1
    if qq != 1:
        raise ValueError(f"{q} is not a prime power")

    if e == 1:
        r = zmod_ring(p)
        return FiniteRing([str(i) for i in range(p)], r.addt, r.mult, 0, 1)

    modulus = _small_irreducible(p, e)
    digits = list(product(range(p), repeat=e))  # tuple (c_{e-1},...,c_0) varies last fastest
    elems = [tuple(reversed(d)) for d in digits]  # lowest-first coefficient tuples
    index = {el: i for i, el in enumerate(elems)}

    def addf(x, y):
        return tuple((a + b) % p for a, b in zip(x, y))

    def mulf(x, y):
        out = [0] * (2 * e - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                out[i + j] = (out[i + j] + a * b) % p
        # reduce modulo the modulus polynomial
        for k in range(len(out) - 1, e - 1, -1):
            c = out[k]
            if c:
                out[k] = 0
                for i in range(e):
                    out[k - e + i] = (out[k - e + i] - c * modulus[i]) % p
        return tuple(out[:e])

    n = len(elems)
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            add[i, j] = index[addf(x, y)]
            mul[i, j] = index[mulf(x, y)]
    names = ["+".join(f"{c}t^{k}" if k else f"{c}" for k, c in enumerate(el) if c) or "0" for el in elems]
    zero = index[tuple([0] * e)]
    one = index[tuple([1] + [0] * (e - 1))]
    return FiniteRing(names, add, mul, zero, one)


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cyclic_unit_subgroups(ring: FiniteRing) -> list[list[int]]:
    """All subgroups of the unit group, assuming it is cyclic (true for fields):
    one per divisor of its order, smallest first."""
    units = ring.units()
    order = len(units)
    gen = None
    for u in units:
        k, x = 1, u
        while x != ring.one:
            x = int(ring.mult[x, u])
            k += 1
        if k == order:
            gen = u
            break
    if gen is None:
        raise ValueError("unit group is not cyclic")
    subs = []
    for d in sorted(k for k in range(1, order + 1) if order % k == 0):
        step = order // d
        g = ring.one
        sub = {g}
        x = g
        for _ in range(d - 1):
            y = x
            for _ in range(step):
                y = int(ring.mult[y, gen])
            x = y
            sub.add(x)
        subs.append(sorted(sub))
    return subs


def quotient_hyperring(ring: FiniteRing, subgroup: Iterable[int]) -> HyperRingTable:
    """Cosets of a multiplicative unit subgroup, with aG * bG = abG and
    aG + bG = {cG : c = ax + by, x, y in G}."""
    g = sorted(set(int(x) for x in subgroup))
    units = set(ring.units())
    if not g or any(x not in units for x in g):
        raise ValueError("subgroup elements must be units")
    if ring.one not in g:
        raise ValueError("subgroup must contain 1")
    for x, y in product(g, repeat=2):
        if int(ring.mult[x, y]) not in g:
            raise ValueError("set is not closed under multiplication")

    n = ring.size
    rep = [-1] * n
    for a in range(n):
        if rep[a] != -1:
            continue
        orbit = sorted(int(ring.mult[a, x]) for x in g)
        for b in orbit:
            rep[b] = orbit[0]
    reps = sorted(set(rep))
    label = {r: ring.names[r] for r in reps}
    cos_index = {r: i for i, r in enumerate(reps)}

    addop: dict[tuple[str, str], set[str]] = {}
    mulop: dict[tuple[str, str], str] = {}
    for ra, rb in product(reps, repeat=2):
        mulop[(label[ra], label[rb])] = label[rep[int(ring.mult[ra, rb])]]
        sums = set()
        for x, y in product(g, repeat=2):
            c = int(ring.addt[ring.mult[ra, x], ring.mult[rb, y]])
            sums.add(label[rep[c]])
        addop[(label[ra], label[rb])] = sums

    add = HyperTable([label[r] for r in reps], addop)
    return HyperRingTable(add, mulop, label[rep[ring.zero]], label[rep[ring.one]])


def krasner_hyperfield() -> HyperRingTable:
    """K = {0,1}: 1+1 = {0,1}, usual multiplication."""
    add = HyperTable(
        ["0", "1"],
        {("0", "0"): ["0"], ("0", "1"): ["1"], ("1", "0"): ["1"], ("1", "1"): ["0", "1"]},
    )
    mul = {("0", "0"): "0", ("0", "1"): "0", ("1", "0"): "0", ("1", "1"): "1"}
    return HyperRingTable(add, mul, "0", "1")


def sign_hyperfield() -> HyperRingTable:
    """S = {-1,0,1} with hyperaddition by the rule of signs."""
    c = ["-1", "0", "1"]
    add = {
        ("0", "0"): ["0"],
        ("0", "1"): ["1"],
        ("1", "0"): ["1"],
        ("0", "-1"): ["-1"],
        ("-1", "0"): ["-1"],
        ("1", "1"): ["1"],
        ("-1", "-1"): ["-1"],
        ("1", "-1"): ["-1", "0", "1"],
        ("-1", "1"): ["-1", "0", "1"],
    }
    mul = {
        ("0", "0"): "0",
        ("0", "1"): "0",
        ("1", "0"): "0",
        ("0", "-1"): "0",
        ("-1", "0"): "0",
        ("1", "1"): "1",
        ("-1", "-1"): "1",
        ("1", "-1"): "-1",
        ("-1", "1"): "-1",
    }
    return HyperRingTable(HyperTable(c, add), mul, "0", "1")


def hyperring_isomorphic_to_krasner(r: HyperRingTable) -> bool:
    """True iff r is the two-element Krasner hyperfield under zero -> 0,
    other -> 1 (the only candidate map)."""
    if len(r.carrier) != 2:
        return False
    other = next(c for c in r.carrier if c != r.zero)
    if other != r.one:
        return False
    k = krasner_hyperfield()
    f = {r.zero: "0", r.one: "1"}
    for a, b in product(r.carrier, repeat=2):
        if {f[c] for c in r.add.op(a, b)} != set(k.add.op(f[a], f[b])):
            return False
        if f[r.mul_of(a, b)] != k.mul_of(f[a], f[b]):
            return False
    return True

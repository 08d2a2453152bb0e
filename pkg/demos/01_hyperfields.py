#!/usr/bin/env python3
"""Two-element and three-element hyperfields, checked axiom by axiom.

The two-element hyperfield has carrier {0,1} with 1+1 = {0,1}; the sign
hyperfield {-1,0,1} adds by the rule of signs. Both arise as quotients of an
honest field by a unit subgroup, and every quotient built here is re-verified
against the axioms table by table.
"""

from hyperspec.hyperkernel import (
    check_hypergroup,
    check_hyperring,
    cyclic_unit_subgroups,
    extend_to_subsets,
    field_ring,
    hyperring_isomorphic_to_krasner,
    krasner_hyperfield,
    quotient_hyperring,
    sign_hyperfield,
)

K = krasner_hyperfield()
S = sign_hyperfield()

print("== the two-element hyperfield K ==")
for a in K.carrier:
    for b in K.carrier:
        print(f"  {a} + {b} = {sorted(K.add.op(a, b))}")
print("subset extension {1}+{1} =", sorted(extend_to_subsets(K.add, ["1"], ["1"])))
rep = check_hyperring(K)
print("all hyperring axioms pass:", rep.ok, "| hyperfield:", rep.checks["hyperfield"].passed)

print("\n== the sign hyperfield S ==")
print("1 + (-1) =", sorted(S.add.op("1", "-1")))
rep = check_hyperring(S)
print("all hyperring axioms pass:", rep.ok, "| hyperfield:", rep.checks["hyperfield"].passed)
print("canonical hypergroup report:", {k: v.passed for k, v in check_hypergroup(S.add, "canonical").checks.items()})

print("\n== quotients of finite fields by unit subgroups ==")
for q in (3, 4, 5, 7, 9):
    ring = field_ring(q)
    quo = quotient_hyperring(ring, ring.units())
    print(f"F_{q} / F_{q}^x  ->  {len(quo.carrier)} elements, "
          f"hyperring axioms {'pass' if check_hyperring(quo).ok else 'FAIL'}, "
          f"isomorphic to K: {hyperring_isomorphic_to_krasner(quo)}")

print("\nF_7 modulo the squares {1,2,4} gives a three-element hyperfield:")
ring7 = field_ring(7)
sq = quotient_hyperring(ring7, [1, 2, 4])
for a in sq.carrier:
    for b in sq.carrier:
        print(f"  {a} + {b} = {sorted(sq.add.op(a, b))}")
print("axioms:", check_hyperring(sq).ok)

print("\nevery unit subgroup of F_13 gives a hyperring:")
ring13 = field_ring(13)
for sub in cyclic_unit_subgroups(ring13):
    quo = quotient_hyperring(ring13, sub)
    print(f"  |G| = {len(sub):>2}  ->  {len(quo.carrier):>2} cosets, axioms {check_hyperring(quo).ok}")

import json
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec.hyperkernel import (
    HyperRingTable,
    HyperTable,
    check_hypergroup,
    check_hyperring,
    check_hyperring_hom,
    cyclic_unit_subgroups,
    extend_to_subsets,
    field_ring,
    hyperring_isomorphic_to_krasner,
    krasner_hyperfield,
    quotient_hyperring,
    sign_hyperfield,
    zmod_ring,
)

K = krasner_hyperfield()
S = sign_hyperfield()


class TestExtendToSubsets:
    def test_one_plus_one_in_krasner(self):
        assert extend_to_subsets(K.add, ["1"], ["1"]) == frozenset({"0", "1"})

    def test_singletons_reduce_to_op(self):
        for a, b in product(K.carrier, repeat=2):
            assert extend_to_subsets(K.add, [a], [b]) == K.add.op(a, b)

    def test_signs_pair_plus_zero(self):
        assert extend_to_subsets(S.add, ["1", "-1"], ["0"]) == frozenset({"1", "-1"})

    def test_empty_subset_rejected(self):
        with pytest.raises(ValueError):
            extend_to_subsets(K.add, [], ["1"])


class TestHypergroupChecks:
    def test_krasner_addition_is_canonical(self):
        assert check_hypergroup(K.add, "canonical").ok

    def test_signs_addition_is_canonical(self):
        assert check_hypergroup(S.add, "canonical").ok

    def test_missing_inverse_detected(self):
        t = HyperTable(
            ["0", "1"],
            {("0", "0"): ["0"], ("0", "1"): ["1"], ("1", "0"): ["1"], ("1", "1"): ["1"]},
        )
        rep = check_hypergroup(t, "canonical")
        assert not rep.ok
        assert not rep.checks["inverses_unique"].passed
        assert rep.checks["inverses_unique"].witness[0] == "1"

    def test_strong_pass_implies_marty_pass(self):
        for table in (K.add, S.add):
            if check_hypergroup(table, "strong").ok:
                assert check_hypergroup(table, "marty").ok

    def test_canonical_zero_in_a_plus_minus_a(self):
        # 0 lies in a + (-a) whenever the canonical checks pass
        for table in (K.add, S.add):
            rep = check_hypergroup(table, "canonical")
            assert rep.ok
            ids = [e for e in table.carrier if table.op(e, e) == frozenset({e})
                   and all(table.op(e, a) == frozenset({a}) for a in table.carrier)]
            e = ids[0]
            for a in table.carrier:
                inv = [b for b in table.carrier if e in table.op(a, b) and e in table.op(b, a)]
                assert len(inv) == 1
                assert e in table.op(a, inv[0])

    def test_associativity_failure_has_witness(self):
        t = HyperTable(
            ["0", "1"],
            {("0", "0"): ["0"], ("0", "1"): ["0"], ("1", "0"): ["1"], ("1", "1"): ["0"]},
        )
        rep = check_hypergroup(t, "strong")
        if not rep.checks["associativity"].passed:
            assert len(rep.checks["associativity"].witness) == 5

    def test_marty_mode_passes_on_hyperfield_addition(self):
        assert check_hypergroup(K.add, "marty").ok
        assert check_hypergroup(S.add, "marty").ok

    def test_marty_reproducibility_failure(self):
        t = HyperTable(
            ["0", "1"],
            {("0", "0"): ["0"], ("0", "1"): ["0"], ("1", "0"): ["0"], ("1", "1"): ["0"]},
        )
        rep = check_hypergroup(t, "marty")
        assert not rep.ok
        assert not rep.checks["reproducibility"].passed
        assert rep.checks["reproducibility"].witness

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            check_hypergroup(K.add, "weak")


class TestHyperringChecks:
    def test_krasner_is_hyperfield(self):
        rep = check_hyperring(K)
        assert rep.ok
        assert rep.checks["hyperfield"].passed

    def test_signs_is_hyperfield(self):
        rep = check_hyperring(S)
        assert rep.ok
        assert rep.checks["hyperfield"].passed

    def test_broken_multiplication_fails(self):
        mul = {("0", "0"): "0", ("0", "1"): "0", ("1", "0"): "0", ("1", "1"): "0"}
        broken = HyperRingTable(K.add, mul, "0", "1")
        rep = check_hyperring(broken)
        assert not rep.ok
        assert not rep.checks["multiplicative_monoid"].passed

    def test_zero_equals_one_fails(self):
        t = HyperTable(["0"], {("0", "0"): ["0"]})
        r = HyperRingTable(t, {("0", "0"): "0"}, "0", "0")
        rep = check_hyperring(r)
        assert not rep.checks["zero_not_one"].passed


class TestQuotientHyperring:
    def test_f3_mod_units_is_krasner(self):
        ring = field_ring(3)
        q = quotient_hyperring(ring, ring.units())
        assert check_hyperring(q).ok
        assert hyperring_isomorphic_to_krasner(q)

    def test_f5_mod_units_is_krasner(self):
        ring = field_ring(5)
        q = quotient_hyperring(ring, ring.units())
        assert hyperring_isomorphic_to_krasner(q)

    def test_f7_mod_squares_frozen_table(self):
        # cosets {0}, G = {1,2,4}, N = 3G = {3,5,6}; representatives 0, 1, 3.
        # Hyperaddition computed by brute force over c = ax + by, x, y in G.
        ring = field_ring(7)
        q = quotient_hyperring(ring, [1, 2, 4])
        assert check_hyperring(q).ok
        assert check_hyperring(q).checks["hyperfield"].passed
        assert set(q.carrier) == {"0", "1", "3"}
        assert q.add.op("1", "1") == frozenset({"1", "3"})
        assert q.add.op("1", "3") == frozenset({"0", "1", "3"})
        assert q.add.op("3", "3") == frozenset({"1", "3"})
        assert q.add.op("0", "1") == frozenset({"1"})
        assert q.mul_of("3", "3") == "1"  # 3*3 = 9 = 2 in G
        # independent brute force over all coset representative sums
        g = [1, 2, 4]
        rep = {0: "0", **{ring.mult[1, x]: "1" for x in g}, **{int(ring.mult[3, x]): "3" for x in g}}
        for ra, rb in product([0, 1, 3], repeat=2):
            sums = {rep[int(ring.addt[ring.mult[ra, x], ring.mult[rb, y]])] for x in g for y in g}
            assert q.add.op(rep[ra], rep[rb]) == frozenset(sums)

    def test_trivial_subgroup_reproduces_ring_addition(self):
        ring = field_ring(5)
        q = quotient_hyperring(ring, [ring.one])
        assert q.add.is_single_valued()
        assert check_hyperring(q).ok

    def test_non_subgroup_rejected(self):
        ring = field_ring(7)
        with pytest.raises(ValueError):
            quotient_hyperring(ring, [1, 2])  # not closed: 2*2=4 missing

    def test_zmod_quotient_also_works(self):
        ring = zmod_ring(9)
        q = quotient_hyperring(ring, [1, 8])
        assert check_hyperring(q).ok

    @given(st.sampled_from([3, 4, 5, 7, 8, 9, 11, 13]), st.data())
    @settings(max_examples=25, deadline=None)
    def test_every_quotient_passes_hyperring_laws(self, qsize, data):
        ring = field_ring(qsize)
        sub = data.draw(st.sampled_from(cyclic_unit_subgroups(ring)))
        quo = quotient_hyperring(ring, sub)
        assert check_hyperring(quo).ok
        # strong-mode pass implies marty-mode pass on every corpus table
        if check_hypergroup(quo.add, "strong").ok:
            assert check_hypergroup(quo.add, "marty").ok


class TestHyperringHom:
    def test_identity_on_krasner_is_strict(self):
        rep = check_hyperring_hom({"0": "0", "1": "1"}, K, K)
        assert rep.ok
        assert rep.checks["strict"].passed

    def test_sign_map_is_lax(self):
        f = {"-1": "1", "0": "0", "1": "1"}
        rep = check_hyperring_hom(f, S, K)
        assert rep.ok
        assert not rep.checks["strict"].passed  # 1+1={1} in S maps into {0,1} properly

    def test_collapsing_map_fails(self):
        f = {"0": "0", "1": "0"}
        rep = check_hyperring_hom(f, K, K)
        assert not rep.ok
        assert not rep.checks["one_preserved"].passed


class TestSerialization:
    def test_hypertable_roundtrip(self):
        doc = K.add.to_json()
        again = HyperTable.from_json(doc)
        assert again.to_json() == doc

    def test_hyperring_roundtrip(self):
        doc = S.to_json()
        again = HyperRingTable.from_json(doc)
        assert again.to_json() == doc

    def test_json_shape(self):
        doc = K.to_json()
        assert doc["carrier"] == ["0", "1"]
        assert doc["op"]["1,1"] == ["0", "1"]
        assert doc["mul"]["1,1"] == "1"
        assert doc["zero"] == "0" and doc["one"] == "1"
        json.dumps(doc)  # serializable

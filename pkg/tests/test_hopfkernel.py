import numpy as np
import pytest

from hyperspec.algkernel import IdealSubspace
from hyperspec.gfarith import parse_poly
from hyperspec.hopfkernel import (
    HopfData,
    additive_etale_hopf,
    descent_ideal,
    hopf_quotient,
    is_hopf_ideal,
    iterated_coproduct,
    mu_hopf,
    parse_builtin,
    verify_hopf,
)
from hyperspec.linalg import nullspace


class TestVerifyHopf:
    def test_mu54_passes(self, mu54):
        rep = verify_hopf(mu54)
        assert rep.ok, rep.failures()

    def test_addetale32_passes(self, ae32):
        rep = verify_hopf(ae32)
        assert rep.ok, rep.failures()

    def test_all_builtins_pass(self, suite_algebras):
        for h in suite_algebras:
            assert verify_hopf(h).ok

    def test_mu4_with_identity_antipode_fails(self, mu54):
        bad = HopfData(mu54.algebra, mu54.delta, mu54.counit, np.eye(4, dtype=np.int64))
        rep = verify_hopf(bad)
        assert not rep.ok
        assert "antipode_law" in rep.failures()

    def test_right_antipode_law_is_checked(self, ae32):
        assert verify_hopf(ae32).checks["antipode_law_right"].passed

    def test_broken_coproduct_fails_hom_check(self, mu32):
        delta = mu32.delta.copy()
        delta[0, 1] = (delta[0, 1] + 1) % 3
        rep = verify_hopf(HopfData(mu32.algebra, delta, mu32.counit, mu32.antipode))
        assert not rep.ok

    def test_dimension_mismatch_rejected(self, mu32):
        with pytest.raises(ValueError):
            HopfData(mu32.algebra, mu32.delta[:, :1], mu32.counit, mu32.antipode)


class TestHopfIdeals:
    def test_t2_minus_1_in_mu4(self, mu54):
        ideal = IdealSubspace.from_poly(mu54.algebra, parse_poly("T^2-1", mu54.algebra.field))
        assert is_hopf_ideal(mu54, ideal).ok

    def test_augmentation_ideal_always_hopf(self, suite_algebras):
        for h in suite_algebras:
            aug = IdealSubspace(h.algebra, nullspace(h.counit, h.algebra.field.p))
            assert is_hopf_ideal(h, aug).ok

    def test_t_minus_1_not_hopf_in_additive(self, ae32):
        ideal = IdealSubspace.from_poly(ae32.algebra, parse_poly("T-1", ae32.algebra.field))
        chk = is_hopf_ideal(ae32, ideal)
        assert not chk.ok
        assert not chk.counit.passed
        assert chk.counit.witness  # carries the offending vector

    def test_non_ideal_rejected(self, ae32):
        sub = IdealSubspace(ae32.algebra, np.eye(9, dtype=np.int64)[1:2])
        with pytest.raises(ValueError):
            is_hopf_ideal(ae32, sub)


class TestHopfQuotient:
    def test_mu4_mod_t2_minus_1_is_mu2(self, mu54):
        ideal = IdealSubspace.from_poly(mu54.algebra, parse_poly("T^2-1", mu54.algebra.field))
        quo, pi = hopf_quotient(mu54, ideal)
        assert quo.dim == 2
        assert verify_hopf(quo).ok
        # induced coproduct is still group-like on the generator
        gen_col = quo.delta[:, 1]
        assert gen_col[1 * 2 + 1] == 1 and gen_col.sum() == 1

    def test_quotient_by_zero_is_identity(self, mu54):
        zero = IdealSubspace(mu54.algebra, np.zeros((0, 4), dtype=np.int64))
        quo, pi = hopf_quotient(mu54, zero)
        assert (quo.delta == mu54.delta).all()
        assert (quo.antipode == mu54.antipode).all()

    def test_addetale_mod_t3_minus_t(self, ae32):
        ideal = descent_ideal(ae32)
        assert ideal.generator_poly() == parse_poly("T^3-T", ae32.algebra.field)
        quo, _ = hopf_quotient(ae32, ideal)
        assert quo.dim == 3
        # additive coproduct survives: Δ(t) = t⊗1 + 1⊗t
        col = quo.delta[:, 1]
        assert sorted(np.nonzero(col)[0].tolist()) == [1, 3]

    def test_projection_commutes_with_coproducts(self, mu54):
        ideal = IdealSubspace.from_poly(mu54.algebra, parse_poly("T^2-1", mu54.algebra.field))
        quo, pi = hopf_quotient(mu54, ideal)
        p = mu54.algebra.field.p
        lhs = (quo.delta @ pi.mat) % p
        rhs = (np.kron(pi.mat, pi.mat) @ mu54.delta) % p
        assert (lhs == rhs).all()

    def test_non_hopf_ideal_rejected(self, ae32):
        ideal = IdealSubspace.from_poly(ae32.algebra, parse_poly("T-1", ae32.algebra.field))
        with pytest.raises(ValueError, match="Hopf"):
            hopf_quotient(ae32, ideal)


class TestIteratedCoproduct:
    def test_group_like(self, mu54):
        h3 = iterated_coproduct(mu54)
        col = h3[:, 1]
        assert col[(1 * 4 + 1) * 4 + 1] == 1 and col.sum() == 1

    def test_primitive(self, ae32):
        h3 = iterated_coproduct(ae32)
        col = h3[:, 1]
        assert sorted(np.nonzero(col)[0].tolist()) == [1, 9, 81]
        assert col.sum() == 3

    def test_unit_maps_to_unit_cube(self, mu32):
        h3 = iterated_coproduct(mu32)
        col = h3[:, 0]
        assert col[0] == 1 and col.sum() == 1


class TestBuiltins:
    def test_parse_builtin_roundtrip(self):
        h = parse_builtin("mu:5:4")
        assert h.name == "mu:5:4"
        assert h.dim == 4

    def test_parse_rejects_even_characteristic(self):
        with pytest.raises(ValueError, match="odd prime"):
            parse_builtin("mu:2:2")

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_builtin("mu:5")
        with pytest.raises(ValueError):
            parse_builtin("frobnitz:3:1")

    def test_mu_with_nonsplit_n(self):
        # n not dividing p-1: spectrum acquires higher-degree points
        h = mu_hopf(3, 4)
        assert verify_hopf(h).ok

    def test_addetale_k1(self):
        h = additive_etale_hopf(3, 1)
        assert h.dim == 3
        assert verify_hopf(h).ok

    def test_json_roundtrip(self, ae31):
        doc = ae31.to_json()
        again = HopfData.from_json(doc)
        assert verify_hopf(again).ok
        assert (again.delta == ae31.delta).all()
        assert (again.antipode == ae31.antipode).all()
        assert (again.counit == ae31.counit).all()

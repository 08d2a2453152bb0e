import numpy as np
import pytest

from hyperspec.algkernel import (
    IdealSubspace,
    SCAlgebra,
    ideal_is_prime,
    maximal_spectrum,
    monogenic_algebra,
    nilradical,
    quotient_algebra,
    tensor_algebra,
)
from hyperspec.gfarith import PrimeField, FpPoly, minimal_polynomial, parse_poly
from hyperspec.linalg import span_sum

F3 = PrimeField(3)
F5 = PrimeField(5)


def P(text, field=F3):
    return parse_poly(text, field)


def t9_minus_t():
    return monogenic_algebra(F3, FpPoly.make(F3, [0, -1] + [0] * 7 + [1]))


class TestSCAlgebra:
    def test_rejects_noncommutative(self):
        mul = np.zeros((2, 2, 2), dtype=np.int64)
        mul[0, 0, 0] = 1
        mul[0, 1, 1] = 1
        mul[1, 0, 1] = 1
        mul[1, 1, 0] = 1
        mul[1, 0, 0] = 2  # break symmetry
        with pytest.raises(ValueError, match="commutative"):
            SCAlgebra(F3, ["1", "t"], mul, [1, 0])

    def test_rejects_bad_unit(self):
        alg = monogenic_algebra(F3, P("T^2+1"))
        with pytest.raises(ValueError, match="unit"):
            SCAlgebra(F3, list(alg.basis), alg.mul, [0, 1])

    def test_json_roundtrip(self):
        alg = monogenic_algebra(F5, P("T^4-1", F5))
        doc = alg.to_json()
        again = SCAlgebra.from_json(doc)
        assert again.to_json() == doc


class TestTensorAlgebra:
    def test_field_mismatch_rejected(self):
        with pytest.raises(ValueError, match="field"):
            tensor_algebra(monogenic_algebra(F3, P("T^2+1")), monogenic_algebra(F5, P("T^2+2", F5)))

    def test_f9_tensor_f9_splits_into_two_fields(self):
        f9 = monogenic_algebra(F3, P("T^2+1"))
        ten = tensor_algebra(f9, f9)
        assert ten.dim == 4
        pts = maximal_spectrum(ten)
        assert [pt.degree for pt in pts] == [2, 2]
        assert nilradical(ten).dim == 0

    def test_tensor_with_base_field_is_identity(self):
        base = monogenic_algebra(F3, P("T-1"))
        f9 = monogenic_algebra(F3, P("T^2+1"))
        ten = tensor_algebra(f9, base)
        assert ten.dim == f9.dim
        assert (ten.mul == f9.mul).all()

    def test_mu4_tensor_square_has_16_points(self):
        a = monogenic_algebra(F5, P("T^4-1", F5))
        ten = tensor_algebra(a, a)
        assert ten.dim == 16
        assert len(maximal_spectrum(ten)) == 16


class TestQuotientAlgebra:
    def test_mu4_mod_t2_minus_1(self):
        a = monogenic_algebra(F5, P("T^4-1", F5))
        ideal = IdealSubspace.from_poly(a, P("T^2-1", F5))
        quo, pi = quotient_algebra(a, ideal)
        assert quo.dim == 2
        assert minimal_polynomial(quo.generator, quo) == P("T^2-1", F5)
        assert pi.is_algebra_hom()

    def test_zero_ideal_gives_same_algebra(self):
        a = monogenic_algebra(F3, P("T^2+1"))
        quo, pi = quotient_algebra(a, IdealSubspace(a, np.zeros((0, 2), dtype=np.int64)))
        assert quo.dim == a.dim
        assert (pi.mat == np.eye(2, dtype=np.int64)).all()

    def test_t3_minus_t_mod_t(self):
        a = monogenic_algebra(F3, P("T^3-T"))
        ideal = IdealSubspace.from_poly(a, P("T"))
        quo, _ = quotient_algebra(a, ideal)
        assert quo.dim == 1

    def test_unit_ideal_rejected(self):
        a = monogenic_algebra(F3, P("T^2+1"))
        with pytest.raises(ValueError, match="unit ideal"):
            quotient_algebra(a, IdealSubspace.from_poly(a, FpPoly.one(F3)))

    def test_kernel_of_projection_is_ideal(self):
        a = t9_minus_t()
        ideal = IdealSubspace.from_poly(a, P("T^2+1"))
        quo, pi = quotient_algebra(a, ideal)
        from hyperspec.linalg import nullspace

        ker = nullspace(pi.mat, 3)
        assert IdealSubspace(a, ker) == ideal


class TestSpectrum:
    def test_mu4_spectrum(self):
        pts = maximal_spectrum(monogenic_algebra(F5, P("T^4-1", F5)))
        assert sorted(pt.label for pt in pts) == ["(T-1)", "(T-2)", "(T-3)", "(T-4)"]
        assert all(pt.degree == 1 for pt in pts)

    def test_field_has_unique_zero_ideal_point(self):
        pts = maximal_spectrum(monogenic_algebra(F3, P("T^2+1")))
        assert len(pts) == 1
        assert pts[0].degree == 2
        assert pts[0].ideal.dim == 0

    def test_t9_minus_t_spectrum(self):
        pts = maximal_spectrum(t9_minus_t())
        labels = [pt.label for pt in pts]
        assert labels[:3] == ["(T)", "(T-2)", "(T-1)"] or sorted(labels[:3]) == sorted(["(T)", "(T-1)", "(T-2)"])
        assert sorted(labels[3:]) == ["(T^2+1)", "(T^2+2T+2)", "(T^2+T+2)"]
        assert [pt.degree for pt in pts] == [1, 1, 1, 2, 2, 2]

    def test_points_ordered_by_degree_then_basis(self):
        pts = maximal_spectrum(t9_minus_t())
        keys = [(pt.degree,) + pt.ideal.sort_key() for pt in pts]
        assert keys == sorted(keys)

    def test_every_point_is_prime(self):
        for alg in (t9_minus_t(), monogenic_algebra(F5, P("T^4-1", F5))):
            for pt in maximal_spectrum(alg):
                assert ideal_is_prime(alg, pt.ideal)

    def test_pairwise_comaximal(self):
        alg = t9_minus_t()
        pts = maximal_spectrum(alg)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                s = span_sum(pts[i].ideal.basis, pts[j].ideal.basis, 3)
                assert s.shape[0] == alg.dim  # sum is the unit ideal

    def test_degrees_plus_nilradical_fill_dimension(self):
        for alg in (
            t9_minus_t(),
            monogenic_algebra(F5, P("T^4-1", F5)),
            monogenic_algebra(F3, P("T^3", F3)),
            monogenic_algebra(F3, P("T^6+T^4+2T^2+2")),
        ):
            pts = maximal_spectrum(alg)
            assert sum(pt.degree for pt in pts) + nilradical(alg).dim == alg.dim

    def test_residue_maps_are_algebra_homs(self):
        for pt in maximal_spectrum(t9_minus_t()):
            assert pt.resmap.is_algebra_hom()

    def test_local_nonreduced_algebra(self):
        alg = monogenic_algebra(F3, P("T^3"))  # local, residue F_3
        pts = maximal_spectrum(alg)
        assert len(pts) == 1
        assert pts[0].degree == 1
        assert pts[0].ideal.dim == 2

    def test_mixed_nilpotents_and_split_points(self):
        # T^2(T-1) : two points, one with nilpotents
        alg = monogenic_algebra(F3, P("T^3+2T^2"))
        pts = maximal_spectrum(alg)
        assert len(pts) == 2
        assert sorted(pt.label for pt in pts) == ["(T)", "(T-1)"]


class TestIdealIsPrime:
    def test_t_in_t3_minus_t(self):
        alg = monogenic_algebra(F3, P("T^3-T"))
        assert ideal_is_prime(alg, IdealSubspace.from_poly(alg, P("T")))

    def test_t3_plus_t_not_prime(self):
        alg = t9_minus_t()
        assert not ideal_is_prime(alg, IdealSubspace.from_poly(alg, P("T^3+T")))

    def test_zero_ideal_in_field(self):
        alg = monogenic_algebra(F3, P("T^2+1"))
        assert ideal_is_prime(alg, IdealSubspace(alg, np.zeros((0, 2), dtype=np.int64)))

    def test_unit_ideal_is_not_prime(self):
        alg = monogenic_algebra(F3, P("T^2+1"))
        assert not ideal_is_prime(alg, IdealSubspace.from_poly(alg, FpPoly.one(F3)))


class TestIdealSubspace:
    def test_absorbing_check(self):
        alg = t9_minus_t()
        ideal = IdealSubspace.from_poly(alg, P("T^2+1"))
        assert ideal.is_absorbing()
        # a random subspace is typically not an ideal
        sub = IdealSubspace(alg, np.eye(9, dtype=np.int64)[1:2])
        assert not sub.is_absorbing()

    def test_canonical_equality(self):
        alg = monogenic_algebra(F5, P("T^4-1", F5))
        a = IdealSubspace.from_poly(alg, P("T^2-1", F5))
        b = IdealSubspace.from_generators(
            alg, [alg.element_from_poly(P("2T^2-2", F5)), alg.element_from_poly(P("T^3-T", F5))]
        )
        assert a == b

    def test_generator_poly(self):
        alg = t9_minus_t()
        ideal = IdealSubspace.from_poly(alg, P("T^3+T"))
        assert ideal.generator_poly() == P("T^3+T")


class TestLinMap:
    def test_composition_is_matrix_product(self):
        alg = monogenic_algebra(F5, P("T^4-1", F5))
        ideal = IdealSubspace.from_poly(alg, P("T^2-1", F5))
        quo, pi = quotient_algebra(alg, ideal)
        ideal2 = IdealSubspace.from_poly(quo, P("T-1", F5))
        quo2, pi2 = quotient_algebra(quo, ideal2)
        composed = pi.then(pi2)
        assert (composed.mat == (pi2.mat @ pi.mat) % 5).all()
        assert composed.dst is quo2
        v = alg.element_from_poly(P("T^3+2T", F5))
        assert (composed.apply(v) == pi2.apply(pi.apply(v))).all()

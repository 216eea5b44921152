"""Killing-tensor spaces, compatible families and the system catalog."""

from fractions import Fraction

import pytest

from haantjeskit.haantjes import is_haantjes_zero
from haantjeskit.killing import (EmptyFamily, KillingError,
                                 UnsupportedDimension, catalog,
                                 compatible_family, family_operator,
                                 flat_killing_one_forms, killing_residual,
                                 killing_space, span_equal, symmetric_product,
                                 PotentialSpec)
from haantjeskit.symalg import Poly, parse_poly, var


class TestKillingSpace:
    def test_dimension_three(self):
        assert len(killing_space(3)) == 20

    def test_dimension_two(self):
        assert len(killing_space(2)) == 6

    def test_unsupported_dimension(self):
        with pytest.raises(UnsupportedDimension):
            killing_space(5)

    def test_all_elements_satisfy_killing_equation(self):
        for n in (2, 3):
            for k in killing_space(n).elements:
                assert killing_residual(k).is_zero()

    def test_deterministic(self):
        a = killing_space(3).elements
        b = killing_space(3).elements
        assert a == b


class TestOneForms:
    def test_symmetric_products_are_killing(self):
        forms = flat_killing_one_forms(3)
        assert len(forms) == 6
        for v in forms:
            for w in forms:
                assert killing_residual(symmetric_product(v, w)).is_zero()

    def test_products_span_whole_space(self):
        forms = flat_killing_one_forms(3)
        products = [symmetric_product(v, w)
                    for i, v in enumerate(forms) for w in forms[i:]]
        assert span_equal(products, killing_space(3).elements)


class TestCompatibleFamilies:
    @pytest.mark.parametrize("name", ["sw1", "oscillator", "oo", "iv"])
    def test_catalog_families_recovered(self, name):
        pot, reference = catalog()[name]
        fam = compatible_family(killing_space(3), pot)
        assert len(fam.params) == 6
        assert span_equal(fam.basis(), reference.basis())
        assert fam.tensor == reference.tensor

    def test_nonmaximal_family_is_subfamily(self):
        _, sw1 = catalog()["sw1"]
        _, sub = catalog()["nonmaximal-3d"]
        assert len(sub.params) == 4
        merged = sub.basis() + sw1.basis()
        assert span_equal(merged, sw1.basis())

    def test_family_members_are_killing(self):
        for name in ("sw1", "oo", "iv", "nonmaximal-3d"):
            _, fam = catalog()[name]
            assert killing_residual(fam.tensor).is_zero()

    def test_generic_potential_keeps_rotation_free_family(self):
        # The metric and the coordinate squares survive for a generic
        # potential; a full Killing basis always admits at least the
        # metric itself, so the family is never empty here.
        pot = PotentialSpec(name="cubic", dimension=3,
                            generators=[parse_poly("x1^3 + x2")])
        fam = compatible_family(killing_space(3), pot)
        assert len(fam.params) == 5

    def test_incompatible_restricted_basis_raises(self):
        from haantjeskit.killing import KillingBasis
        from haantjeskit.tensor import TensorField
        k = TensorField.from_matrix(
            [[parse_poly(v) for v in row]
             for row in (["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"])])
        restricted = KillingBasis(dimension=3, elements=[k])
        pot = PotentialSpec(name="shear", dimension=3,
                            generators=[parse_poly("x1^3*x2")])
        with pytest.raises(EmptyFamily):
            compatible_family(restricted, pot)


class TestFamilyOperations:
    def test_specialize(self):
        _, fam = catalog()["sw1"]
        binding = {var(f"b{i}"): Fraction(i) for i in range(1, 7)}
        k = fam.specialize(binding)
        assert k[(0, 0)] == parse_poly("4*x2^2 + 5*x3^2 + 1")

    def test_specialize_missing_parameter(self):
        _, fam = catalog()["sw1"]
        with pytest.raises(KillingError):
            fam.specialize({var("b1"): 1})

    def test_basis_linearity(self):
        _, fam = catalog()["iv"]
        basis = fam.basis()
        assert len(basis) == 6
        rebuilt = basis[0].map(lambda c: c * Poly.variable(var("b1")))
        for i in range(1, 6):
            rebuilt = rebuilt + basis[i].map(
                lambda c, i=i: c * Poly.variable(var(f"b{i + 1}")))
        assert rebuilt == fam.tensor

    def test_nonmaximal_family_operator_haantjes_zero(self):
        _, fam = catalog()["nonmaximal-3d"]
        zero, _ = is_haantjes_zero(family_operator(fam))
        assert zero

    def test_diagonal_specialization_haantjes_zero(self):
        _, fam = catalog()["sw1"]
        op = family_operator(fam, {var(f"b{i}"): Fraction(v) for i, v in
                                   zip(range(1, 7), (3, 1, 4, 0, 0, 0))})
        assert is_haantjes_zero(op)[0]

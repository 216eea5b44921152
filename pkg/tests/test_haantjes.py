"""Nijenhuis/Haantjes torsions and conservation-law checks."""

import random
from fractions import Fraction

import pytest

from haantjeskit.haantjes import (OperatorField, conservation_check, haantjes,
                                  is_haantjes_zero, nijenhuis)
from haantjeskit.symalg import Poly, parse_poly, var
from haantjeskit.tensor import TensorError, TensorField, hessian_operator
from .test_symalg import random_poly

XS = [var(s) for s in ("x1", "x2", "x3")]


def random_operator(rng, n):
    return OperatorField(TensorField.from_function(
        n, (1, 1), lambda idx: random_poly(rng, XS[:n], max_terms=2,
                                           max_degree=2)))


class TestValence:
    def test_rejects_non_operator(self):
        with pytest.raises(TensorError):
            OperatorField(TensorField.zero(3, (0, 2)))


class TestAlgebraicProperties:
    def test_antisymmetry(self):
        rng = random.Random(0)
        for _ in range(10):
            a = random_operator(rng, 3)
            for t in (nijenhuis(a), haantjes(a)):
                for (i, j, k) in t.indices():
                    assert t[(i, j, k)] == -t[(i, k, j)]

    def test_scaling(self):
        rng = random.Random(1)
        for _ in range(5):
            a = random_operator(rng, 3)
            c = Fraction(rng.randint(1, 9), rng.randint(1, 5))
            scaled = OperatorField(a.tensor.map(lambda p: p * Poly.const(c)))
            assert nijenhuis(scaled) == nijenhuis(a).map(
                lambda p: p * Poly.const(c ** 2))
            assert haantjes(scaled) == haantjes(a).map(
                lambda p: p * Poly.const(c ** 4))

    def test_identity_operator_torsion_free(self):
        a = OperatorField(TensorField.identity_operator(3))
        assert nijenhuis(a).is_zero()
        assert haantjes(a).is_zero()

    def test_two_dimensional_haantjes_vanishes(self):
        rng = random.Random(2)
        for _ in range(50):
            assert haantjes(random_operator(rng, 2)).is_zero()


class TestHessianExamples:
    def test_cubic_is_haantjes_zero(self):
        op = OperatorField(hessian_operator(parse_poly("x1^3"), 3))
        zero, witness = is_haantjes_zero(op)
        assert zero and witness is None

    def test_planar_square_is_haantjes_zero(self):
        op = OperatorField(hessian_operator(parse_poly("x1^2"), 2))
        assert is_haantjes_zero(op)[0]

    def test_mixed_cubic_components(self):
        # Hessian of x1^3 + x1*x2*x3: the nonzero Haantjes components
        # sit exactly on the all-distinct index triples, with value
        # +-12*x1*(x2^2 - x3^2) by permutation parity.
        op = OperatorField(hessian_operator(parse_poly("x1^3 + x1*x2*x3"), 3))
        h = haantjes(op)
        base = parse_poly("12*x1*x2^2 - 12*x1*x3^2")
        even = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
        odd = {(0, 2, 1), (2, 1, 0), (1, 0, 2)}
        for idx in h.indices():
            if idx in even:
                assert h[idx] == base
            elif idx in odd:
                assert h[idx] == -base
            else:
                assert h[idx].is_zero()
        zero, witness = is_haantjes_zero(op)
        assert not zero and witness is not None

    def test_witness_indices_are_one_based(self):
        op = OperatorField(hessian_operator(parse_poly("x1^3 + x1*x2*x3"), 3))
        _, (i, j, k, component) = is_haantjes_zero(op)
        assert min(i, j, k) >= 1 and max(i, j, k) <= 3
        assert not component.is_zero()


class TestConservation:
    def test_hessian_conservation_laws(self):
        f = parse_poly("x1^3 + x1*x2*x3")
        op = OperatorField(hessian_operator(f, 3))
        for u in [parse_poly("x1"), parse_poly("x2"), parse_poly("x3"), f]:
            assert conservation_check(op, u).is_conserved()

    def test_residual_antisymmetric(self):
        rng = random.Random(3)
        a = random_operator(rng, 3)
        res = conservation_check(a, random_poly(rng, XS)).residual
        for i in range(3):
            for j in range(3):
                assert res[(i, j)] == -res[(j, i)]

    def test_generic_operator_not_conserved(self):
        a = OperatorField(TensorField.from_matrix(
            [[parse_poly("x2"), parse_poly("0")],
             [parse_poly("0"), parse_poly("0")]], valence=(1, 1)))
        assert not conservation_check(a, parse_poly("x1")).is_conserved()

"""Groebner bases, ideal membership, dimension, linear factors."""

from fractions import Fraction

import pytest

from haantjeskit.ideals import (Ideal, MonomialOrder, NotZeroDimensional,
                                UnitIdeal, ZeroIdeal, buchberger,
                                default_order, haantjes_zero_ideal,
                                hilbert_dimension, ideal_equal, leading_term,
                                linear_factor, member, normal_form,
                                radical_member, s_polynomial)
from haantjeskit.symalg import Monomial, Poly, parse_poly, var

B = [var(f"b{i}") for i in range(1, 7)]


def border(k=6):
    return default_order(B[:k])


class TestMonomialOrder:
    def test_grevlex_degree_first(self):
        order = border(3)
        lo = Monomial.of(var("b1"), 1)
        hi = Monomial.of(var("b3"), 2)
        assert order.key(hi) > order.key(lo)

    def test_grevlex_tie_break(self):
        # Among degree-2 monomials: b1^2 > b1*b2 > b2^2 > b1*b3.
        order = border(3)
        m = [parse_poly(s) for s in ("b1^2", "b1*b2", "b2^2", "b1*b3")]
        keys = [order.key(next(iter(p.terms))) for p in m]
        assert keys == sorted(keys, reverse=True)

    def test_leading_term(self):
        order = border(3)
        mono, coeff = leading_term(parse_poly("2*b1*b2 - 7*b3^3"), order)
        assert coeff == Fraction(-7)
        assert mono == Monomial.of(var("b3"), 3)


class TestBuchberger:
    def test_textbook_example(self):
        # <x^2 - y, x^3 - z> in grevlex(x > y > z) written over b-vars.
        order = border(3)
        gens = [parse_poly("b1^2 - b2"), parse_poly("b1^3 - b3")]
        basis = buchberger(gens, order)
        # The reduced basis is a Groebner basis containing the inputs'
        # consequences; y^3 - z^2 = (x^3)^2-relation must reduce to 0.
        assert normal_form(parse_poly("b2^3 - b3^2"), basis, order).is_zero()

    def test_s_pairs_reduce_to_zero(self):
        order = border()
        gens = [parse_poly("b1*b2 - b3"), parse_poly("b2^2 - b4"),
                parse_poly("b1^2 - b5")]
        basis = buchberger(gens, order)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                s = s_polynomial(basis[i], basis[j], order)
                assert normal_form(s, basis, order).is_zero()

    def test_normal_form_is_linear(self):
        order = border(3)
        basis = buchberger([parse_poly("b1^2 - b2")], order)
        f = parse_poly("b1^2 + b1")
        g = parse_poly("b1^2 - 1")
        assert normal_form(f + g, basis, order) == \
            normal_form(f, basis, order) + normal_form(g, basis, order)


class TestMembership:
    def test_member(self):
        order = border(3)
        ideal = Ideal([parse_poly("b1^2"), parse_poly("b2")], order)
        assert member(parse_poly("b1^3 + b1*b2"), ideal)
        assert not member(parse_poly("b1"), ideal)
        assert member(Poly.zero(), ideal)

    def test_radical_member(self):
        order = border(3)
        ideal = Ideal([parse_poly("b1^2")], order)
        assert radical_member(parse_poly("b1"), ideal)
        assert not member(parse_poly("b1"), ideal)
        assert not radical_member(parse_poly("b2"), ideal)

    def test_ideal_equal(self):
        order = border(3)
        a = Ideal([parse_poly("b1 + b2"), parse_poly("b1 - b2")], order)
        b = Ideal([parse_poly("b1"), parse_poly("b2")], order)
        assert ideal_equal(a, b)
        assert not ideal_equal(a, Ideal([parse_poly("b1")], order))


class TestHilbertDimension:
    def test_principal(self):
        order = border(3)
        assert hilbert_dimension(Ideal([parse_poly("b1*b2")], order)) == 2

    def test_point(self):
        order = border(3)
        ideal = Ideal([parse_poly("b1"), parse_poly("b2"),
                       parse_poly("b3")], order)
        assert hilbert_dimension(ideal) == 0

    def test_zero_ideal_raises(self):
        with pytest.raises(ZeroIdeal):
            hilbert_dimension(Ideal([], border(3)))

    def test_unit_ideal_raises(self):
        with pytest.raises(UnitIdeal):
            hilbert_dimension(Ideal([parse_poly("2")], border(3)))


class TestLinearFactor:
    def test_difference_of_squares(self):
        factors = {str(f) for f in linear_factor(parse_poly("b1^2 - b2^2"))}
        assert factors == {"b1 + b2", "b1 - b2"}

    def test_monomial_content(self):
        factors = {str(f) for f in
                   linear_factor(parse_poly("b1^2*b2 - b1*b2^2"))}
        assert factors == {"b1", "b2", "b1 - b2"}

    def test_inhomogeneous(self):
        factors = {str(f) for f in linear_factor(parse_poly("b1^2 - 1"))}
        assert factors == {"b1 + 1", "b1 - 1"}

    def test_irreducible_quadric(self):
        assert linear_factor(parse_poly("b1^2 + b2^2 + 1")) == []

    def test_verification_by_division(self):
        f = parse_poly("b1^3 + 3*b1^2 + 3*b1 + 1")
        assert {str(g) for g in linear_factor(f)} == {"b1 + 1"}


class TestHaantjesZeroIdeal:
    def test_oscillator_ideal_is_zero(self):
        from haantjeskit.killing import catalog
        _, fam = catalog()["oscillator"]
        ideal = haantjes_zero_ideal(fam)
        assert ideal.generators == []
        assert ideal.is_zero()

    def test_generators_primitive_normalized(self):
        from haantjeskit.killing import catalog
        _, fam = catalog()["oo"]
        ideal = haantjes_zero_ideal(fam)
        for g in ideal.generators:
            coeffs = list(g.terms.values())
            assert all(c.denominator == 1 for c in coeffs)

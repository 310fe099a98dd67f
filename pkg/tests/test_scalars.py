"""Exact scalar tower: sparse polynomials and the quadratic extension."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stableforms.scalars import (
    Poly,
    QuadExt,
    as_scalar,
    quad_sqrt,
    scalar_is_zero,
    scalar_str,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8)


class TestPoly:
    def test_constant_roundtrip(self):
        p = Poly.constant(Fraction(3, 2))
        assert p.is_constant()
        assert p.constant_value() == Fraction(3, 2)

    def test_arithmetic(self):
        a, b = Poly.variable("a"), Poly.variable("b")
        p = (a + b) * (a - b)
        q = a * a - b * b
        assert (p - q).is_zero()

    def test_substitute_full(self):
        a, b = Poly.variable("a"), Poly.variable("b")
        p = 2 * a * b + b * b - 1
        v = p.substitute({"a": Fraction(1, 2), "b": Fraction(3)})
        assert v == Fraction(3 + 9 - 1)

    def test_substitute_partial(self):
        a, b = Poly.variable("a"), Poly.variable("b")
        p = a * b + a
        q = p.substitute({"b": Fraction(2)})
        assert q.variables() == {"a"}
        assert (q - 3 * a).is_zero()

    def test_degree(self):
        a, b = Poly.variable("a"), Poly.variable("b")
        assert (a * a * b + b).degree() == 3

    @given(x=rationals, y=rationals)
    def test_constant_arithmetic_matches_fractions(self, x, y):
        px, py = Poly.constant(x), Poly.constant(y)
        assert (px * py + px).constant_value() == x * y + x


class TestQuadExt:
    def test_root_squares_to_radicand(self):
        r = quad_sqrt(3)
        sq = r * r
        assert isinstance(sq, (QuadExt, Fraction))
        assert as_scalar(sq - 3) == 0 or scalar_is_zero(as_scalar(sq - 3))

    def test_conjugate_product_is_rational(self):
        x = 2 + quad_sqrt(3)
        y = 2 - quad_sqrt(3)
        prod = as_scalar(x * y)
        assert scalar_is_zero(as_scalar(prod - 1))

    def test_inverse(self):
        x = 2 + quad_sqrt(3)
        one = as_scalar(x * (1 / x))
        assert scalar_is_zero(as_scalar(one - 1))

    def test_str_mentions_radical(self):
        assert "sqrt" in scalar_str(as_scalar(quad_sqrt(3)))

    def test_zero_detection(self):
        r = quad_sqrt(3)
        assert scalar_is_zero(as_scalar(r - r))
        assert not scalar_is_zero(as_scalar(r - 1))


class TestMixing:
    def test_poly_times_fraction(self):
        a = Poly.variable("a")
        assert ((a * Fraction(1, 2)) * 2 - a).is_zero()

    def test_scalar_str_plain(self):
        assert scalar_str(Fraction(-7, 3)) == "-7/3"

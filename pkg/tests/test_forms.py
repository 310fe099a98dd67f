"""Exterior algebra kernel, cross-checked against brute-force oracles."""

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    contract_dict,
    form_to_dict,
    perm_sign,
    random_form_dict,
    wedge_dicts,
)
from stableforms import Form, basis_monomials, parse_form, sort_with_sign


def random_form(rng: Random, degree: int, **kw) -> Form:
    return Form(6, degree, dict(random_form_dict(rng, degree, **kw)))


class TestSortWithSign:
    @given(st.permutations(list(range(1, 6))))
    def test_matches_inversion_count(self, seq):
        idx, sign = sort_with_sign(tuple(seq))
        assert idx == tuple(sorted(seq))
        assert sign == perm_sign(seq)

    def test_repeat_is_zero(self):
        assert sort_with_sign((1, 3, 3))[1] == 0


class TestWedge:
    def test_against_oracle(self):
        rng = Random(101)
        for _ in range(60):
            p, q = rng.randint(1, 3), rng.randint(1, 3)
            fd = random_form_dict(rng, p)
            gd = random_form_dict(rng, q)
            w = Form(6, p, dict(fd)).wedge(Form(6, q, dict(gd)))
            assert form_to_dict(w) == wedge_dicts(fd, gd)

    def test_graded_commutativity(self):
        rng = Random(102)
        for _ in range(40):
            p, q = rng.randint(1, 3), rng.randint(1, 3)
            f, g = random_form(rng, p), random_form(rng, q)
            lhs = f.wedge(g)
            rhs = g.wedge(f) * Fraction((-1) ** (p * q))
            assert (lhs - rhs).is_zero()

    def test_associativity(self):
        rng = Random(103)
        for _ in range(25):
            f = random_form(rng, 1)
            g = random_form(rng, 2)
            h = random_form(rng, 2)
            assert (f.wedge(g).wedge(h) - f.wedge(g.wedge(h))).is_zero()

    def test_one_form_squares_to_zero(self):
        rng = Random(104)
        for _ in range(25):
            f = random_form(rng, 1)
            assert f.wedge(f).is_zero()

    def test_degree_overflow_is_zero(self):
        f = parse_form("e1234", 6, 4)
        g = parse_form("e345", 6, 3)
        assert f.wedge(g).is_zero()


class TestContraction:
    def test_against_oracle(self):
        rng = Random(105)
        for _ in range(60):
            p = rng.randint(1, 5)
            fd = random_form_dict(rng, p)
            v = [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                 for _ in range(6)]
            c = Form(6, p, dict(fd)).contract(v)
            assert form_to_dict(c) == contract_dict(fd, v)

    def test_antiderivation(self):
        rng = Random(106)
        for _ in range(25):
            p = rng.randint(1, 2)
            f, g = random_form(rng, p), random_form(rng, 2)
            v = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
            lhs = f.wedge(g).contract(v)
            rhs = (f.contract(v).wedge(g)
                   + f.wedge(g.contract(v)) * Fraction((-1) ** p))
            assert (lhs - rhs).is_zero()

    def test_double_contraction_antisymmetry(self):
        rng = Random(107)
        for _ in range(25):
            f = random_form(rng, 3)
            x = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
            y = [Fraction(rng.randint(-5, 5)) for _ in range(6)]
            a = f.contract(x).contract(y)
            b = f.contract(y).contract(x)
            assert (a + b).is_zero()

    def test_contract_basis_matches_vector(self):
        rng = Random(108)
        f = random_form(rng, 3)
        for i in range(1, 7):
            v = [Fraction(1 if j == i else 0) for j in range(1, 7)]
            assert (f.contract_basis(i) - f.contract(v)).is_zero()


class TestAccessors:
    def test_coefficient_signs(self):
        f = parse_form("2*e12", 6, 2)
        assert f.coefficient((1, 2)) == 2
        assert f.coefficient((2, 1)) == -2
        assert f.coefficient((1, 1)) == 0

    def test_evaluate2(self):
        f = parse_form("e12+e34+e56", 6, 2)
        e1 = [Fraction(1), 0, 0, 0, 0, 0]
        e2 = [0, Fraction(1), 0, 0, 0, 0]
        assert f.evaluate2(e1, e2) == 1
        assert f.evaluate2(e2, e1) == -1
        assert f.evaluate2(e1, e1) == 0

    def test_basis_monomials_count(self):
        assert len(basis_monomials(6, 2)) == 15
        assert len(basis_monomials(6, 3)) == 20

    def test_parse_rejects_bad_index(self):
        from stableforms import ParseError
        with pytest.raises(ParseError):
            parse_form("e17", 6, 2)

    def test_parse_quadratic_extension_coefficient(self):
        f = parse_form("(2+sqrt3)*e5 + e6", 6, 1)
        from stableforms.scalars import as_scalar, scalar_is_zero
        c5 = f.coefficient((5,))
        assert scalar_is_zero(as_scalar(c5 * c5 - 4 * c5 + 1))
        assert f.coefficient((6,)) == 1

"""Lie algebra layer: differentials, Jacobi, closed forms, constructions."""

from fractions import Fraction

import pytest

from stableforms import (
    LieAlgebra,
    direct_sum,
    parse_form,
    parse_structure_equations,
)

FLAT = parse_structure_equations("(0,0,0,0,0,0)", name="flat")
# d e1 = e23 realizes the three-dimensional Heisenberg bracket inside
# six dimensions; every higher differential vanishes.
HEIS = parse_structure_equations("(e23,0,0,0,0,0)", name="heis")


class TestDifferential:
    def test_flat_differential_vanishes(self):
        f = parse_form("e12+e34+e56", 6, 2)
        assert FLAT.differential(f).is_zero()

    def test_leibniz_rule(self):
        g = parse_structure_equations("(e23, -e13, 0, e15, 0, 0)",
                                      name="leibniz-probe")
        a = parse_form("e1+2*e4", 6, 1)
        b = parse_form("e25-e36", 6, 2)
        lhs = g.differential(a.wedge(b))
        rhs = g.differential(a).wedge(b) - a.wedge(g.differential(b))
        assert (lhs - rhs).is_zero()

    def test_d_squared_zero_on_valid_algebra(self):
        g = parse_structure_equations("(0, -e13, e12, 0, -e46, e45)",
                                      name="two-blocks")
        assert g.jacobi_report().ok
        for i in range(1, 7):
            e = parse_form(f"e{i}", 6, 1)
            assert g.differential(g.differential(e)).is_zero()

    def test_jacobi_failure_detected(self):
        bad = parse_structure_equations("(e23, e45, 0, 0, 0, 0)",
                                        name="broken")
        report = bad.jacobi_report()
        assert not report.ok
        assert report.failures


class TestClosedForms:
    def test_flat_dimensions(self):
        assert len(FLAT.closed_forms(2)) == 15
        assert len(FLAT.closed_forms(3)) == 20

    def test_heisenberg_closed_two_forms(self):
        basis = HEIS.closed_forms(2)
        # d(e1^x) adds e23^x: exactly the pairs touching e1 drop out,
        # except e12 and e13 (e23 ^ e2 = e23 ^ e3 = 0).
        assert len(basis) == 12
        for form in basis:
            assert HEIS.differential(form).is_zero()

    def test_generic_element_spans_basis(self):
        basis = HEIS.closed_forms(2)
        generic = basis.generic("b")
        names = basis.coefficient_names("b")
        assert len(names) == len(basis)
        assert generic.variables() == set(names)

    def test_contains(self):
        basis = HEIS.closed_forms(2)
        assert basis.contains(parse_form("e23+2*e45", 6, 2))
        assert not basis.contains(parse_form("e12+e14", 6, 2))


class TestUnimodularity:
    def test_flat_is_unimodular(self):
        assert FLAT.is_unimodular()

    def test_trace_detects_nonunimodular(self):
        g = parse_structure_equations("(e16, 0, 0, 0, 0, 0)",
                                      name="traceful")
        assert not g.is_unimodular()


class TestConstructions:
    def test_direct_sum_blocks(self):
        # e(1,1): d e1 = -e1^e3 shape in three dimensions, doubled.
        g3 = parse_structure_equations("(-e13, e23, 0)", name="half")
        g = direct_sum(g3, g3)
        assert g.dim == 6
        assert g.jacobi_report().ok
        d4 = g.differential(parse_form("e4", 6, 1))
        assert (d4 - parse_form("-e46", 6, 2)).is_zero()

    def test_extend_by_line(self):
        g5 = parse_structure_equations("(e23, 0, 0, 0, 0)", name="five")
        g6 = g5.extend_by_line()
        assert g6.dim == 6
        assert g6.differential(parse_form("e6", 6, 1)).is_zero()
        assert g6.jacobi_report().ok

    def test_change_basis_preserves_jacobi(self):
        g = parse_structure_equations("(0, -e13, e12, 0, -e46, e45)",
                                      name="two-blocks")
        m = [[Fraction(1 if i == j else 0) for j in range(6)]
             for i in range(6)]
        m[0][1] = Fraction(2)  # e1 -> e1 + 2 e2 on the coframe
        h = g.change_basis(m)
        assert h.jacobi_report().ok

    def test_substitute_parameters(self):
        g = parse_structure_equations("(a*e16, -a*e26, 0, 0, 0, 0)",
                                      params=("a",), name="family")
        h = g.substitute({"a": Fraction(3)})
        assert h.is_numeric()
        d1 = h.differential(parse_form("e1", 6, 1))
        assert (d1 - parse_form("3*e16", 6, 2)).is_zero()
        assert h.is_unimodular()

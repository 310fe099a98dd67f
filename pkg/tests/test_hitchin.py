"""Stable-form kernel: cubic endomorphism, quartic invariant, metric.

The flat-model values are pinned against an independent brute-force
oracle, and the structural identities run on >= 10^3 seeded random
rational inputs each, with zero tolerated failures.
"""

from fractions import Fraction
from itertools import combinations
from random import Random

import pytest

from oracles import (
    form_to_dict,
    k_matrix_bruteforce,
    lambda_bruteforce,
    mat_mul,
    mat_scalar_identity,
    pullback_dict,
    random_form_dict,
    random_invertible_matrix,
)
from stableforms import (
    Form,
    dual_map,
    g2_form,
    induced_metric,
    k_endomorphism,
    lambda_invariant,
    parse_form,
    parse_structure_equations,
    shf_check,
)
from stableforms.hitchin import imaginary_part, is_normalized
from stableforms.linalg import nullspace

NU = parse_form("e123456", 6, 6)
FLAT = parse_structure_equations("(0,0,0,0,0,0)", name="flat")
F0 = parse_form("e12+e34+e56", 6, 2)
RHO0 = parse_form("e135-e146-e236-e245", 6, 3)
PROPERTY_INPUTS = 1000


def frac_matrix(m):
    return [[Fraction(x) for x in row] for row in m]


class TestFlatModelOracle:
    def test_lambda_is_minus_four(self):
        assert lambda_invariant(RHO0, NU) == Fraction(-4)
        assert lambda_bruteforce(form_to_dict(RHO0)) == Fraction(-4)

    def test_k_squared_is_minus_four_identity(self):
        k = frac_matrix(k_endomorphism(RHO0, NU))
        assert mat_mul(k, k) == mat_scalar_identity(Fraction(-4))

    def test_k_matches_bruteforce_oracle(self):
        k = frac_matrix(k_endomorphism(RHO0, NU))
        assert k == k_matrix_bruteforce(form_to_dict(RHO0))

    def test_random_inputs_match_oracle(self):
        rng = Random(201)
        for _ in range(100):
            d = random_form_dict(rng, 3)
            rho = Form(6, 3, dict(d))
            assert frac_matrix(k_endomorphism(rho, NU)) \
                == k_matrix_bruteforce(d)
            assert Fraction(lambda_invariant(rho, NU)) \
                == lambda_bruteforce(d)


class TestPropertySuite:
    def test_trace_of_k_vanishes(self):
        rng = Random(202)
        for _ in range(PROPERTY_INPUTS):
            rho = Form(6, 3, dict(random_form_dict(rng, 3, density=0.7)))
            k = k_endomorphism(rho, NU)
            assert sum(Fraction(k[i][i]) for i in range(6)) == 0

    def test_lambda_scales_quartically(self):
        rng = Random(203)
        for _ in range(PROPERTY_INPUTS):
            rho = Form(6, 3, dict(random_form_dict(rng, 3, density=0.5)))
            t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            if rng.random() < 0.5:
                t = -t
            lam = Fraction(lambda_invariant(rho, NU))
            lam_t = Fraction(lambda_invariant(rho * t, NU))
            assert lam_t == t ** 4 * lam

    def test_k_squared_is_lambda_identity_on_negative_orbit(self):
        # GL-pullbacks of the flat-model 3-form rho0 fill the open orbit
        # with negative invariant: lambda pulls back by det^2 * (-4) < 0.
        rng = Random(204)
        for _ in range(PROPERTY_INPUTS):
            m = random_invertible_matrix(rng)
            d = pullback_dict(form_to_dict(RHO0), m)
            rho = Form(6, 3, dict(d))
            lam = Fraction(lambda_invariant(rho, NU))
            assert lam < 0
            k = frac_matrix(k_endomorphism(rho, NU))
            assert mat_mul(k, k) == mat_scalar_identity(lam)

    def test_compatibility_implies_gram_symmetry(self):
        # A pair (F, rho) with F ^ rho = 0 makes the bilinear form
        # F(X, K Y) symmetric; sampled two ways: GL-pullbacks of the
        # flat compatible pair, and random rho solved from the linear
        # compatibility system for a random F.
        rng = Random(205)
        f0d, rho0d = form_to_dict(F0), form_to_dict(RHO0)
        checked = 0
        for _ in range(PROPERTY_INPUTS - 100):
            m = random_invertible_matrix(rng)
            f = Form(6, 2, dict(pullback_dict(f0d, m)))
            rho = Form(6, 3, dict(pullback_dict(rho0d, m)))
            assert f.wedge(rho).is_zero()
            self._assert_gram_symmetric(f, rho)
            checked += 1
        three_monomials = list(combinations(range(1, 7), 3))
        for _ in range(100):
            f = Form(6, 2, dict(random_form_dict(rng, 2, density=0.6)))
            rows = self._compatibility_rows(f, three_monomials)
            kernel = nullspace(rows)
            if not kernel:
                continue
            weights = [Fraction(rng.randint(-4, 4)) for _ in kernel]
            coeffs = [sum(w * v[i] for w, v in zip(weights, kernel))
                      for i in range(len(three_monomials))]
            rho = Form(6, 3, {idx: c for idx, c
                              in zip(three_monomials, coeffs) if c != 0})
            assert f.wedge(rho).is_zero()
            self._assert_gram_symmetric(f, rho)
            checked += 1
        assert checked >= PROPERTY_INPUTS - 100

    @staticmethod
    def _compatibility_rows(f: Form, three_monomials):
        rows = []
        for five in combinations(range(1, 7), 5):
            row = []
            for idx in three_monomials:
                wedge = f.wedge(Form.monomial(6, idx))
                row.append(Fraction(wedge.coefficient(five)))
            rows.append(row)
        return rows

    @staticmethod
    def _assert_gram_symmetric(f: Form, rho: Form):
        k = frac_matrix(k_endomorphism(rho, NU))
        fmat = [[Fraction(f.coefficient((i + 1, j + 1))) for j in range(6)]
                for i in range(6)]
        gram = mat_mul(fmat, k)
        assert gram == [[gram[j][i] for j in range(6)] for i in range(6)]


class TestMetricAndNormalization:
    def test_flat_metric_is_identity(self):
        result = induced_metric(F0, RHO0)
        assert result.symmetric
        assert result.positive_definite
        assert result.normalized
        assert frac_matrix(result.gram) == mat_scalar_identity(Fraction(1))

    def test_normalization_ratio_scales_quartically(self):
        ok, ratio = is_normalized(F0, RHO0)
        assert ok and ratio == 1
        ok2, ratio2 = is_normalized(F0, RHO0 * Fraction(2))
        assert not ok2 and ratio2 == 16

    def test_dual_map_covector_action(self):
        maps = dual_map(RHO0, NU)
        assert frac_matrix(maps.on_vectors) \
            == [[-Fraction(c) for c in row] for row in maps.k_matrix]
        for i in range(1, 7):
            alpha = parse_form(f"e{i}", 6, 1)
            twice = maps.covector_image(maps.covector_image(alpha))
            assert (twice + alpha * Fraction(4)).is_zero()

    def test_imaginary_part_flat(self):
        rho_hat = imaginary_part(F0, RHO0)
        expected = parse_form("e136+e145+e235-e246", 6, 3)
        assert (rho_hat - expected).is_zero()
        assert (imaginary_part(F0, rho_hat) + RHO0).is_zero()


class TestStructureCheck:
    def test_flat_pair_passes(self):
        report = shf_check(FLAT, F0, RHO0)
        assert report.overall
        assert report.normalization_ratio == 1
        assert report.lambda_tilde == Fraction(-4)

    def test_incompatible_pair_flagged(self):
        f = parse_form("e12+e34+e56", 6, 2)
        rho = parse_form("e134", 6, 3)
        report = shf_check(FLAT, f, rho)
        assert not report.overall
        assert not report.compatible or not report.lambda_negative

    def test_nonclosed_witness_flagged(self):
        g = parse_structure_equations("(0, -e13, e12, 0, -e46, e45)",
                                      name="two-blocks")
        report = shf_check(g, parse_form("e14+e25+e36", 6, 2), RHO0)
        assert not report.overall

    def test_g2_extension_closed_for_flat_pair(self):
        ext = g2_form(FLAT, F0, RHO0)
        assert ext.closed
        assert ext.phi.degree == 3 and ext.phi.dim == 7

"""Symbolic regressions for the intermediate identities behind three
non-existence certificates.

Each class fixes one algebra from the catalog and re-derives, in exact
polynomial arithmetic, the quantities its obstruction argument rests on:
dimensions of the spaces of closed 2- and 3-forms, closedness and spanning
of a fixed ansatz basis, the coefficient relations forced by the
compatibility condition F ^ rho = 0, and the value of the sign quantity
q(x) = F(J_rho x, x) on the resulting solution family.

Coefficients are multivariate polynomials over the rationals, so every
equality asserted here holds identically on the whole solution family,
not merely at sampled points.  Numeric companion tests re-check, at
random rational points of the 2-form parameter space, that the symbolic
elimination patterns are forced (the compatibility kernel has exactly the
predicted dimension and every kernel vector satisfies the relations).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from random import Random

import pytest

from stableforms import Form, instantiate, load_catalog, parse_form, resolve_entry
from stableforms.forms import basis_monomials
from stableforms.linalg import nullspace, rank
from stableforms.obstructions import j_vector, sign_quantity
from stableforms.scalars import Poly

E1 = [Fraction(1), 0, 0, 0, 0, 0]
E2 = [0, Fraction(1), 0, 0, 0, 0]


def sym(name: str) -> Poly:
    return Poly.variable(name)


def mono(text: str, degree: int) -> Form:
    return parse_form(text, 6, degree)


def combine(texts, degree, coefficients) -> Form:
    total = Form(6, degree, {})
    for text, c in zip(texts, coefficients):
        total = total + mono(text, degree) * c
    return total


def vanishes(value) -> bool:
    """True when a scalar (Fraction or Poly) is identically zero."""
    if isinstance(value, Poly):
        return value.is_zero()
    return value == 0


def identical(left, right) -> bool:
    diff = left - right
    return vanishes(diff)


def assert_independent_and_spanning(generators, degree, closed_basis):
    """The generators are closed, linearly independent, and span the
    full space of closed forms of the given degree."""
    monomials = basis_monomials(6, degree)
    rows = [
        [Fraction(g.coefficient(m)) for m in monomials]
        for g in generators
    ]
    assert rank(rows) == len(generators)
    for g in generators:
        assert closed_basis.contains(g)
    assert len(closed_basis) == len(generators)


def compatibility_kernel(f_form, rho_generators):
    """Kernel of a |-> F ^ (sum a_i rho_i) as vectors of coefficients."""
    rows = [
        [Fraction(f_form.wedge(g).coefficient(m)) for g in rho_generators]
        for m in combinations(range(1, 7), 5)
    ]
    return nullspace(rows)


def _algebra(name: str):
    entries = load_catalog()
    return instantiate(resolve_entry(entries, name)).algebra


@pytest.fixture(scope="module")
def algebra_g63():
    return _algebra("g_{6,3}^{0,-1}")


@pytest.fixture(scope="module")
def algebra_g613():
    return _algebra("g_{6,13}^{-1,1/2,0}")


@pytest.fixture(scope="module")
def algebra_g670():
    return _algebra("g_{6,70}^{0,0}")


@pytest.fixture(scope="module")
def solved_g613():
    return TestVectorSignFamilyWithDoubledWitness.build_family()


@pytest.fixture(scope="module")
def solved_g670():
    return TestAntisymmetricPairFamily.build_family()


class TestDiagonalizableSolvableFamily:
    """Algebra g_{6,3}^{0,-1}: the non-existence argument eliminates most
    closed-form coefficients from the compatibility equations and then
    reads off a contradiction; the dimension bookkeeping and elimination
    pattern below are what that derivation rests on."""

    F_TEXTS = ["e16", "e23", "e26", "e36", "e45", "e46", "e56"]
    RHO_TEXTS = [
        "e123", "e126", "e136", "e146", "e156", "e236",
        "e246", "e256", "e345", "e346", "e356", "e456",
    ]

    @staticmethod
    def eliminated_coefficients(b):
        """Coefficient relations forced by F ^ rho = 0 (checked to be
        forced in test_elimination_is_forced): four coordinates vanish
        and two are determined by the rest."""
        a = {i: sym(f"a{i}") for i in (7, 8, 9, 10, 11, 12)}
        zero = Poly.constant(Fraction(0))
        a[1] = a[2] = a[4] = a[5] = zero
        a[3] = a[9] * b[1]
        a[6] = a[9] * b[3] - a[12] * b[2]
        return a

    def test_closed_form_dimensions(self, algebra_g63):
        assert len(algebra_g63.closed_forms(2)) == 7
        assert len(algebra_g63.closed_forms(3)) == 12

    def test_ansatz_bases_span_closed_forms(self, algebra_g63):
        f_gens = [mono(t, 2) for t in self.F_TEXTS]
        rho_gens = [mono(t, 3) for t in self.RHO_TEXTS]
        for g in f_gens + rho_gens:
            assert algebra_g63.differential(g).is_zero()
        assert_independent_and_spanning(f_gens, 2, algebra_g63.closed_forms(2))
        assert_independent_and_spanning(rho_gens, 3, algebra_g63.closed_forms(3))

    def test_elimination_solves_compatibility(self, algebra_g63):
        # The derivation scales the symplectic candidate so that the e45
        # coefficient is 1; the relations hold only after that
        # normalization (checked in the companion test below).
        b = {i: sym(f"b{i}") for i in range(1, 8)}
        b[5] = Poly.constant(Fraction(1))
        a = self.eliminated_coefficients(b)
        f_form = combine(self.F_TEXTS, 2, [b[i] for i in range(1, 8)])
        rho = combine(self.RHO_TEXTS, 3, [a[i] for i in range(1, 13)])
        assert algebra_g63.differential(f_form).is_zero()
        assert algebra_g63.differential(rho).is_zero()
        assert f_form.wedge(rho).is_zero()

    def test_scaling_normalization_is_load_bearing(self):
        # With the e45 coefficient left symbolic the same relations do NOT
        # solve the compatibility equations: the elimination pattern is
        # tied to the normalization b5 = 1.
        b = {i: sym(f"b{i}") for i in range(1, 8)}
        a = self.eliminated_coefficients(b)
        f_form = combine(self.F_TEXTS, 2, [b[i] for i in range(1, 8)])
        rho = combine(self.RHO_TEXTS, 3, [a[i] for i in range(1, 13)])
        assert not f_form.wedge(rho).is_zero()

    def test_elimination_is_forced(self, algebra_g63):
        # At random rational points of the 2-form parameter space (with
        # b5 = 1 and all coordinates nonzero) the compatibility kernel is
        # exactly 6-dimensional and every kernel vector satisfies the
        # relations used above.
        rng = Random(2026)
        rho_gens = [mono(t, 3) for t in self.RHO_TEXTS]
        for _ in range(4):
            bv = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]),
                           rng.choice([1, 2])) for _ in range(7)]
            bv[4] = Fraction(1)
            f_form = combine(self.F_TEXTS, 2, bv)
            kernel = compatibility_kernel(f_form, rho_gens)
            assert len(kernel) == 6
            for vec in kernel:
                a = [Fraction(x) for x in vec]
                assert a[0] == a[1] == a[3] == a[4] == 0
                assert a[2] == a[8] * bv[0]
                assert a[5] == a[8] * bv[2] - a[11] * bv[1]


class TestVectorSignFamilyWithDoubledWitness:
    """Algebra g_{6,13}^{-1,1/2,0}: the obstruction uses the single vector
    x = e1 twice, and hinges on the image J_rho e1 lying in the span of
    e1, e2, e4 with e4-coefficient 2*a1*a2 — which forces
    q(e1) = F(J_rho e1, e1) = 0 identically, while positivity of the
    induced metric would require q(e1) < 0."""

    F_TEXTS = ["e13", "-1/2*e16+e23", "e24", "e26", "e36", "e46", "e56"]
    RHO_TEXTS = [
        "e126", "e135", "e136", "1/2*e146-e234", "1/2*e156+e235", "e236",
        "e245", "e246", "e256", "e346", "e356", "e456",
    ]

    @classmethod
    def build_family(cls):
        """Symbolic (F, rho) solving dF = 0, d rho = 0, F ^ rho = 0 with
        the normalizations b1 = b7 = 1 (they clear the denominator of the
        division step a4 = (-a11*b3 - a2*b3*b5) / b7)."""
        b = {i: sym(f"b{i}") for i in range(2, 7)}
        b[1] = Poly.constant(Fraction(1))
        b[7] = Poly.constant(Fraction(1))
        a = {i: sym(f"a{i}") for i in (1, 2, 3, 6, 10, 11)}
        a[5] = a[2] * b[2]
        a[7] = -a[2] * b[3]
        a[8] = -a[3] * b[3]
        a[9] = a[5] * b[2] + a[2] * b[4]
        a[12] = a[2] * b[6]
        a[4] = -a[11] * b[3] - a[2] * b[3] * b[5]
        f_form = combine(cls.F_TEXTS, 2, [b[i] for i in range(1, 8)])
        rho = combine(cls.RHO_TEXTS, 3, [a[i] for i in range(1, 13)])
        return f_form, rho, a, b

    def test_dimensions_and_basis(self, algebra_g613):
        f_gens = [mono(t, 2) for t in self.F_TEXTS]
        rho_gens = [mono(t, 3) for t in self.RHO_TEXTS]
        for g in f_gens + rho_gens:
            assert algebra_g613.differential(g).is_zero()
        assert_independent_and_spanning(f_gens, 2, algebra_g613.closed_forms(2))
        assert_independent_and_spanning(rho_gens, 3, algebra_g613.closed_forms(3))

    def test_family_solves_all_three_equations(self, algebra_g613, solved_g613):
        f_form, rho, _, _ = solved_g613
        assert algebra_g613.differential(f_form).is_zero()
        assert algebra_g613.differential(rho).is_zero()
        assert f_form.wedge(rho).is_zero()

    def test_image_of_e1_has_e4_coefficient_2_a1_a2(self, solved_g613):
        _, rho, a, _ = solved_g613
        image = j_vector(rho, E1)
        assert identical(image[3], 2 * a[1] * a[2])
        for i in (2, 4, 5):
            assert vanishes(image[i])

    def test_sign_quantity_vanishes_identically(self, solved_g613):
        f_form, rho, _, _ = solved_g613
        assert vanishes(sign_quantity(f_form, rho, E1))

    def test_e1_e2_coefficients_under_unit_normalization(self, solved_g613):
        # The remaining two components of J_rho e1, evaluated on the slice
        # a2 = 1 where the derivation's closed-form expressions apply.
        _, rho, a, b = solved_g613
        image = j_vector(rho, E1)
        unit = {"a2": Fraction(1)}
        expected_e1 = -b[3] * (a[11] * b[2] + b[2] * b[5] + (a[2] - 1) * a[3])
        expected_e2 = a[2] * b[3] * (a[11] + b[5])
        assert identical(image[0].substitute(unit), expected_e1.substitute(unit))
        assert identical(image[1].substitute(unit), expected_e2.substitute(unit))


class TestAntisymmetricPairFamily:
    """Algebra g_{6,70}^{0,0}: the obstruction pairs x = e1 with y = e2 and
    rests on the exact antisymmetry q(e1) = -q(e2) on the compatibility
    family.

    On this family the sign quantity is q(e1) = -2*a1*a5 identically (a1
    and a5 being the coefficients of e125 and e146 + e236 in the closed
    ansatz).  The superficially similar value -2*a1*(a4 + a5) — with a4
    the coefficient of e145 - e235 — is NOT equal to it: q(e1) does not
    depend on a4 at all, and the two expressions differ at every
    compatible point with a1*a4 != 0.  Both facts are pinned below, the
    identity symbolically and the refutation at an exact point, because
    only the a4-free form of the identity is consistent with the
    compatibility relations (re-derived from scratch in
    test_elimination_is_forced)."""

    F_TEXTS = ["e13+e24", "e16+e45", "e26-e35", "e34", "e36", "e46", "e56"]
    RHO_TEXTS = [
        "e125", "e135+e245", "e136", "e145-e235", "e146+e236", "e156",
        "e246", "e256", "e345", "e346", "e356", "e456",
    ]

    @classmethod
    def build_family(cls):
        """Symbolic (F, rho) solving dF = 0, d rho = 0, F ^ rho = 0 with
        the normalization b1 = 1; the six relations eliminate a2, a3, a6,
        a8, a11, a12 and leave a1, a4, a5, a7, a9, a10 free."""
        b = {i: sym(f"b{i}") for i in range(2, 8)}
        b[1] = Poly.constant(Fraction(1))
        a = {i: sym(f"a{i}") for i in (1, 4, 5, 7, 9, 10)}
        a[2] = a[1] * b[4] * Fraction(1, 2)
        a[3] = -a[7]
        a[8] = a[4] * b[2] + a[2] * b[3] - a[1] * b[5]
        a[6] = a[2] * b[2] + a[1] * b[6] - a[4] * b[3]
        a[11] = (a[7] - a[9]) * b[3] + a[8] * b[4] + a[5] * b[2] \
            + a[4] * b[6] + a[2] * b[5]
        a[12] = (a[9] - a[3]) * b[2] - a[5] * b[3] - a[4] * b[5] \
            - a[6] * b[4] + a[2] * b[6]
        f_form = combine(cls.F_TEXTS, 2, [b[i] for i in range(1, 8)])
        rho = combine(cls.RHO_TEXTS, 3, [a[i] for i in range(1, 13)])
        return f_form, rho, a, b

    def test_dimensions_and_basis(self, algebra_g670):
        f_gens = [mono(t, 2) for t in self.F_TEXTS]
        rho_gens = [mono(t, 3) for t in self.RHO_TEXTS]
        for g in f_gens + rho_gens:
            assert algebra_g670.differential(g).is_zero()
        assert_independent_and_spanning(f_gens, 2, algebra_g670.closed_forms(2))
        assert_independent_and_spanning(rho_gens, 3, algebra_g670.closed_forms(3))

    def test_paired_generators_are_forced(self, algebra_g670):
        # The two-term generators admit no closed sign variant, so the
        # coordinates a4 and a5 are unambiguous.
        for text in ("e145+e235", "e146-e236", "e135-e245",
                     "e145", "e235", "e146", "e236"):
            assert not algebra_g670.differential(mono(text, 3)).is_zero()

    def test_family_solves_all_three_equations(self, algebra_g670, solved_g670):
        f_form, rho, _, _ = solved_g670
        assert algebra_g670.differential(f_form).is_zero()
        assert algebra_g670.differential(rho).is_zero()
        assert f_form.wedge(rho).is_zero()

    def test_sign_quantities_are_antisymmetric(self, solved_g670):
        f_form, rho, a, _ = solved_g670
        q1 = sign_quantity(f_form, rho, E1)
        q2 = sign_quantity(f_form, rho, E2)
        assert identical(q1, -q2)
        assert identical(q1, -2 * a[1] * a[5])

    def test_sign_quantity_does_not_depend_on_a4(self, solved_g670):
        f_form, rho, a, _ = solved_g670
        q1 = sign_quantity(f_form, rho, E1)
        # Not equal to the a4-dependent variant as polynomials...
        assert not identical(q1, -2 * a[1] * (a[4] + a[5]))
        # ...and refuted at an exact compatible point with a4 != 0, a5 = 0:
        # b2 = ... = b7 = 0, a1 = a4 = 1 and the other free coordinates 0,
        # where every eliminated coordinate vanishes as well.
        point = {"a1": Fraction(1), "a4": Fraction(1), "a5": Fraction(0),
                 "a7": Fraction(0), "a9": Fraction(0), "a10": Fraction(0)}
        point.update({f"b{i}": Fraction(0) for i in range(2, 8)})
        assert q1.substitute(point) == 0
        wrong = -2 * a[1] * (a[4] + a[5])
        assert wrong.substitute(point) == -2

    def test_image_components_of_e1(self, solved_g670):
        # J_rho e1 stays in the span of e1, ..., e4, and the e4-component
        # of J_rho e2 mirrors the e3-component of J_rho e1.
        _, rho, _, _ = solved_g670
        image1 = j_vector(rho, E1)
        image2 = j_vector(rho, E2)
        assert vanishes(image1[4]) and vanishes(image1[5])
        assert identical(image2[3], -image1[2])

    def test_elimination_is_forced(self, algebra_g670):
        # Independent re-derivation: at random rational 2-form points the
        # compatibility kernel is exactly 6-dimensional, every kernel
        # vector satisfies the six relations of build_family, and the sign
        # quantities computed from scratch on kernel combinations equal
        # -2*a1*a5 and +2*a1*a5.
        rng = Random(424242)
        rho_gens = [mono(t, 3) for t in self.RHO_TEXTS]
        for _ in range(4):
            bv = [Fraction(1)] + [Fraction(rng.randint(-4, 4)) for _ in range(6)]
            f_form = combine(self.F_TEXTS, 2, bv)
            kernel = compatibility_kernel(f_form, rho_gens)
            assert len(kernel) == 6
            for vec in kernel:
                a = [Fraction(x) for x in vec]
                assert a[1] == a[0] * bv[3] / 2
                assert a[2] == -a[6]
                assert a[7] == a[3] * bv[1] + a[1] * bv[2] - a[0] * bv[4]
                assert a[5] == a[1] * bv[1] + a[0] * bv[5] - a[3] * bv[2]
                assert a[10] == (a[6] - a[8]) * bv[2] + a[7] * bv[3] \
                    + a[4] * bv[1] + a[3] * bv[5] + a[1] * bv[4]
                assert a[11] == (a[8] - a[2]) * bv[1] - a[4] * bv[2] \
                    - a[3] * bv[4] - a[5] * bv[3] + a[1] * bv[5]
            weights = [Fraction(rng.randint(-3, 3)) for _ in kernel]
            coeffs = [sum(w * v[i] for w, v in zip(weights, kernel))
                      for i in range(12)]
            rho = combine(self.RHO_TEXTS, 3, coeffs)
            assert f_form.wedge(rho).is_zero()
            assert algebra_g670.differential(rho).is_zero()
            q1 = sign_quantity(f_form, rho, E1)
            q2 = sign_quantity(f_form, rho, E2)
            a1, a5 = Fraction(coeffs[0]), Fraction(coeffs[4])
            assert Fraction(q1) == -2 * a1 * a5
            assert Fraction(q2) == 2 * a1 * a5

"""Stable 3-forms in six dimensions and the structures they induce.

Given a 3-form rho and a reference volume nu, contraction defines an
endomorphism K of the frame through iota_X rho wedge rho = iota_{K X} nu.
Its square is scalar, K^2 = lam * Id with lam = tr(K^2)/6; rho is stable
iff lam != 0, and lam < 0 yields an almost complex structure
J = -K / sqrt(-lam).

Calibration, pinned by regression tests on the standard pair
F0 = e12 + e34 + e56, rho0 = e135 - e146 - e236 - e245:

  * K e1 = -2 e2, lam = -4, K^2 = -4 Id;
  * the dual action on covectors is alpha -> alpha o K (coefficient
    row times the K matrix);
  * J = -K/2 sends e1 to e2 (the standard complex structure), and the
    substitution e^i -> sum_j J[i][j] e^j carries rho0 to its imaginary
    companion e235 + e145 + e136 - e246;
  * the induced metric g(X, Y) = F(X, J Y) is the identity; with the
    unnormalized endomorphism, gt(X, Y) = F(X, (-K) Y) = 2 Id.

Orientation: oriented_volume flips the sign of the standard volume so
that F^3 is a positive multiple, and all structure-level invariants
here are computed against that volume.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import Form, standard_volume
from .lie import LieAlgebra
from .linalg import gram_positive_definite, mat_eq, mat_mul, mat_scale
from .scalars import (
    Poly,
    as_scalar,
    exact_sqrt,
    scalar_is_zero,
    scalar_sign,
)


def kappa_vector(eta: Form, nu: Form) -> list:
    """Solve iota_X nu = eta for X; eta is a 5-form, nu a volume form.

    With nu = c * e^{1...n}, contracting by e_k removes index k with
    sign (-1)^(k-1), so the coordinates of X read off directly.
    """
    n = nu.dim
    if eta.degree != n - 1 or nu.degree != n:
        raise ValueError("kappa_vector needs an (n-1)-form and a volume")
    if len(nu.terms) != 1:
        raise ValueError("reference volume must have a single term")
    ((_, c0),) = nu.terms.items()
    coords = []
    for k in range(1, n + 1):
        rest = tuple(i for i in range(1, n + 1) if i != k)
        sign = -1 if (k - 1) % 2 else 1
        c = eta.coefficient(rest)
        coords.append(as_scalar(sign * c / c0))
    return coords


def k_endomorphism(rho: Form, nu: Form) -> list[list]:
    """Matrix of K with K[i][j] = i-th coordinate of K(e_j)."""
    n = rho.dim
    if rho.degree != 3 or n != 6:
        raise ValueError("k_endomorphism needs a 3-form in six dimensions")
    cols = []
    for j in range(1, n + 1):
        eta = rho.contract_basis(j).wedge(rho)
        cols.append(kappa_vector(eta, nu))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def lambda_invariant(rho: Form, nu: Form):
    """tr(K^2)/6; rho is stable iff this is nonzero."""
    k = k_endomorphism(rho, nu)
    n = len(k)
    tr = Fraction(0)
    for i in range(n):
        for j in range(n):
            tr = tr + k[i][j] * k[j][i]
    return as_scalar(tr / 6)


@dataclass(frozen=True)
class DualMaps:
    """K-derived actions: on_vectors is J~ = -K, on_covectors is
    alpha -> alpha o K (row vector times the K matrix)."""

    k_matrix: list
    lambda_tilde: object

    @property
    def on_vectors(self) -> list:
        return mat_scale(self.k_matrix, Fraction(-1))

    def covector_image(self, alpha: Form) -> Form:
        """The 1-form alpha o K."""
        if alpha.degree != 1:
            raise ValueError("covector_image needs a 1-form")
        n = alpha.dim
        terms = {}
        for j in range(1, n + 1):
            acc = 0
            for i in range(1, n + 1):
                acc = acc + alpha.coefficient((i,)) * self.k_matrix[i - 1][j - 1]
            acc = as_scalar(acc)
            if not scalar_is_zero(acc):
                terms[(j,)] = acc
        return Form(n, 1, terms)


def dual_map(rho: Form, nu: Form) -> DualMaps:
    k = k_endomorphism(rho, nu)
    return DualMaps(k, lambda_invariant(rho, nu))


def oriented_volume(f: Form) -> tuple[Form, object]:
    """(nu, c) with F^3 = 6 c nu, c > 0 and nu = +/- standard volume.

    Raises ValueError when F^3 = 0 (degenerate 2-form).
    """
    if f.degree != 2 or f.dim != 6:
        raise ValueError("oriented_volume needs a 2-form in six dimensions")
    nu0 = standard_volume(6)
    cube = f.wedge(f).wedge(f)
    c = as_scalar(cube.top_coefficient(nu0) / 6)
    if isinstance(c, Poly):
        raise ValueError("oriented_volume needs numeric coefficients")
    if scalar_is_zero(c):
        raise ValueError("degenerate 2-form: F^3 = 0")
    if scalar_sign(c) < 0:
        return -nu0, -c
    return nu0, c


def normalized_j(rho: Form, nu: Form) -> list[list]:
    """The almost complex structure J = -K/sqrt(-lam), exact only.

    Raises ValueError when lam >= 0 or sqrt(-lam) is irrational.
    """
    lam = lambda_invariant(rho, nu)
    if isinstance(lam, Poly):
        raise ValueError("normalized_j needs numeric coefficients")
    if scalar_is_zero(lam) or scalar_sign(lam) > 0:
        raise ValueError(
            f"3-form does not induce a complex structure (invariant {lam})"
        )
    minus = as_scalar(-lam)
    s = exact_sqrt(minus) if isinstance(minus, Fraction) else None
    if s is None:
        raise ValueError(
            "irrational normalization; use the unnormalized endomorphism"
        )
    k = k_endomorphism(rho, nu)
    n = len(k)
    return [[as_scalar(-k[i][j] / s) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class MetricResult:
    """Symmetric bilinear form induced by a compatible pair."""

    gram: list
    lambda_tilde: object
    symmetric: bool
    positive_definite: bool | None
    normalized: bool

    def as_dict(self) -> dict:
        from .scalars import scalar_to_json

        return {
            "gram": [[scalar_to_json(c) for c in row] for row in self.gram],
            "lambda_tilde": scalar_to_json(self.lambda_tilde),
            "symmetric": self.symmetric,
            "positive_definite": self.positive_definite,
            "normalized": self.normalized,
        }


def induced_metric(f: Form, rho: Form) -> MetricResult:
    """g(e_i, e_j) = F(e_i, J e_j), with J normalized when possible.

    Falls back to the unnormalized endomorphism (a positive multiple of
    the metric when the pair is compatible and definite) when
    sqrt(-lam) is irrational; `normalized` records which was used.
    """
    nu, _ = oriented_volume(f)
    lam = lambda_invariant(rho, nu)
    normalized = True
    try:
        j = normalized_j(rho, nu)
    except ValueError:
        if isinstance(lam, Poly) or scalar_is_zero(lam) or scalar_sign(lam) > 0:
            raise
        j = mat_scale(k_endomorphism(rho, nu), Fraction(-1))
        normalized = False
    n = f.dim
    fmat = [[f.coefficient((i + 1, jj + 1)) for jj in range(n)]
            for i in range(n)]
    gram = mat_mul(fmat, j)
    gram = [[as_scalar(c) for c in row] for row in gram]
    symmetric = mat_eq(gram, [[gram[jj][i] for jj in range(n)]
                              for i in range(n)])
    positive = gram_positive_definite(gram) if symmetric else False
    return MetricResult(gram, lam, symmetric, positive, normalized)


def is_normalized(f: Form, rho: Form) -> tuple[bool, object]:
    """Whether the pair satisfies the volume normalization, with ratio.

    The ratio r = lam / (-4 c^2), where F^3 = 6 c nu with c > 0, equals
    1 exactly when the normalization holds; rescaling rho by t scales r
    by t^4, so r is the exact obstruction to normalizing by scaling.
    """
    nu, c = oriented_volume(f)
    lam = lambda_invariant(rho, nu)
    ratio = as_scalar(lam / (-4 * c * c))
    return (not isinstance(ratio, Poly)) and ratio == 1, ratio


@dataclass(frozen=True)
class StructureReport:
    """Itemized verification of a symplectic half-flat pair."""

    algebra: str
    df_zero: bool
    drho_zero: bool
    f_nondegenerate: bool
    lambda_tilde: object
    lambda_negative: bool
    compatible: bool
    metric_symmetric: bool
    metric_positive_definite: bool
    normalization_ratio: object
    normalization_ratio_literal: object
    normalized: bool
    overall: bool
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        from .scalars import scalar_to_json

        out = {
            "algebra": self.algebra,
            "df_zero": self.df_zero,
            "drho_zero": self.drho_zero,
            "f_nondegenerate": self.f_nondegenerate,
            "lambda_tilde": scalar_to_json(self.lambda_tilde),
            "lambda_negative": self.lambda_negative,
            "compatible": self.compatible,
            "metric_symmetric": self.metric_symmetric,
            "metric_positive_definite": self.metric_positive_definite,
            "normalization_ratio": scalar_to_json(self.normalization_ratio),
            "normalization_ratio_literal": scalar_to_json(
                self.normalization_ratio_literal),
            "normalized": self.normalized,
            "overall": self.overall,
            "notes": list(self.notes),
        }
        return out

    def __str__(self) -> str:
        def mark(b):
            return "ok" if b else "FAIL"

        lines = [
            f"structure check: {self.algebra}",
            f"  dF = 0:            {mark(self.df_zero)}",
            f"  d rho = 0:         {mark(self.drho_zero)}",
            f"  F^3 != 0:          {mark(self.f_nondegenerate)}",
            f"  invariant < 0:     {mark(self.lambda_negative)}"
            f"  (value {self.lambda_tilde})",
            f"  F ^ rho = 0:       {mark(self.compatible)}",
            f"  metric definite:   {mark(self.metric_positive_definite)}",
            f"  volume ratio:      {self.normalization_ratio}"
            + ("" if self.normalized else "  (not normalized)"),
            f"  overall:           {mark(self.overall)}",
        ]
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def shf_check(g: LieAlgebra, f: Form, rho: Form) -> StructureReport:
    """Verify that (F, rho) is a symplectic half-flat pair on g.

    Checks closedness of both forms, nondegeneracy of F, negativity of
    the stability invariant, compatibility F ^ rho = 0, and positive
    definiteness of the induced metric.  The volume normalization ratio
    is reported but does not gate `overall`: scaling rho fixes it
    without touching any of the other conditions.
    """
    notes = []
    name = g.name or "(unnamed)"
    df = g.differential(f)
    drho = g.differential(rho)
    df_zero = df.is_zero()
    drho_zero = drho.is_zero()
    if not df_zero:
        notes.append(f"dF = {df}")
    if not drho_zero:
        notes.append(f"d rho = {drho}")
    try:
        nu, c = oriented_volume(f)
        f_nondegenerate = True
    except ValueError:
        f_nondegenerate = False
        nu, c = standard_volume(6), None
        notes.append("F^3 = 0")
    lam = lambda_invariant(rho, nu)
    lam_negative = (not isinstance(lam, Poly)) and (
        not scalar_is_zero(lam)) and scalar_sign(lam) < 0
    compatible = f.wedge(rho).is_zero()
    if f_nondegenerate and lam_negative:
        metric = induced_metric(f, rho)
        symmetric = metric.symmetric
        positive = bool(metric.positive_definite)
        ratio = as_scalar(lam / (-4 * c * c))
        ratio_literal = as_scalar(ratio / 36)
        normalized = ratio == 1
        if not normalized:
            notes.append(f"volume ratio {ratio}; scale rho by "
                         "|ratio|^(-1/4) to normalize")
    else:
        symmetric = False
        positive = False
        ratio = None
        ratio_literal = None
        normalized = False
    overall = (df_zero and drho_zero and f_nondegenerate and lam_negative
               and compatible and symmetric and positive)
    return StructureReport(
        algebra=name,
        df_zero=df_zero,
        drho_zero=drho_zero,
        f_nondegenerate=f_nondegenerate,
        lambda_tilde=lam,
        lambda_negative=lam_negative,
        compatible=compatible,
        metric_symmetric=symmetric,
        metric_positive_definite=positive,
        normalization_ratio=ratio,
        normalization_ratio_literal=ratio_literal,
        normalized=normalized,
        overall=overall,
        notes=tuple(notes),
    )


def imaginary_part(f: Form, rho: Form) -> Form:
    """The companion 3-form obtained by substituting e^i -> J applied.

    Requires the normalized J (exact square root); applying the map
    twice returns -rho.
    """
    nu, _ = oriented_volume(f)
    j = normalized_j(rho, nu)
    return rho.apply_linear(j)


@dataclass(frozen=True)
class G2Extension:
    """The 3-form F ^ e7 + rho on g + R, and its differential."""

    algebra: LieAlgebra
    phi: Form
    d_phi: Form
    closed: bool


def g2_form(g: LieAlgebra, f: Form, rho: Form,
            check: bool = True) -> G2Extension:
    """Extend a pair on g to the canonical 3-form on g + R.

    With check=True (default) the pair must pass shf_check; pass
    check=False to inspect the differential of the extension for a
    non-closed pair.
    """
    if check:
        report = shf_check(g, f, rho)
        if not report.overall:
            raise ValueError(
                "pair fails the structure check; pass check=False to "
                "build the extension anyway"
            )
    h = g.extend_by_line()
    e7 = Form.monomial(7, (7,))
    phi = f.lift(7).wedge(e7) + rho.lift(7)
    d_phi = h.differential(phi)
    return G2Extension(h, phi, d_phi, d_phi.is_zero())

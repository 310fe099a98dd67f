"""SU(2) structures inside SU(3) structures and the type-IIA SUSY pipeline.

An SU(2) structure on a 6-dimensional Lie algebra is a triple
(alpha, omega, Omega): a complex 1-form alpha of square-norm 2, a real
2-form omega and a complex 2-form Omega subject to

    omega^2 = (1/2) Omega ^ conj(Omega) != 0,
    omega ^ Omega = 0,      Omega ^ Omega = 0,
    i_X omega = 0,          i_X Omega = 0,

where X is the complex vector dual to alpha under the metric induced
by the associated SU(3) structure

    F = omega + Re(alpha) ^ Im(alpha),      Psi = alpha ^ Omega

(the 2-form Re(alpha) ^ Im(alpha) is the exact simplification of
(i/2) alpha ^ conj(alpha)).  Rotating the underlying orthogonal spinor
pair by an angle phi produces a circle of SU(2) structures sharing
alpha; for rational points (cos phi, sin phi) on the circle the whole
family stays in exact arithmetic.

The type-IIA supersymmetry system for a constant intermediate SU(2)
structure couples alpha with the components of Re(Omega) parallel and
perpendicular to the rotation:

    d Re(alpha) = 0,
    d Re(Omega)_perp = k_par k_perp Re(alpha) ^ d Im(alpha),
    d Im(Omega) ^ Re(alpha) = -d(Im(alpha) ^ Re(Omega)_par).

`from_shf` turns any symplectic half-flat SU(2) structure whose
Re(alpha) is closed into a solution of that system, and `susy_check`
verifies the three equations exactly; together they make the
construction executable end to end.  Flux data beyond the three
differential equations is out of scope and reported as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import Form
from .hitchin import StructureReport, induced_metric, shf_check
from .lie import LieAlgebra
from .linalg import solve
from .scalars import as_scalar, scalar_is_zero, scalar_sign, scalar_str


@dataclass(frozen=True)
class ComplexForm:
    """A complex-valued form stored as (real part, imaginary part)."""

    re: Form
    im: Form

    def __post_init__(self):
        if self.re.dim != self.im.dim or self.re.degree != self.im.degree:
            raise ValueError(
                "real and imaginary parts must share dimension and degree")

    @property
    def dim(self) -> int:
        return self.re.dim

    @property
    def degree(self) -> int:
        return self.re.degree

    @classmethod
    def from_real(cls, f: Form) -> "ComplexForm":
        return cls(f, Form.zero(f.dim, f.degree))

    def conjugate(self) -> "ComplexForm":
        return ComplexForm(self.re, -self.im)

    def wedge(self, other: "ComplexForm") -> "ComplexForm":
        return ComplexForm(
            self.re.wedge(other.re) - self.im.wedge(other.im),
            self.re.wedge(other.im) + self.im.wedge(other.re),
        )

    def times_i(self) -> "ComplexForm":
        return ComplexForm(-self.im, self.re)

    def __add__(self, other: "ComplexForm") -> "ComplexForm":
        return ComplexForm(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexForm") -> "ComplexForm":
        return ComplexForm(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexForm":
        return ComplexForm(-self.re, -self.im)

    def __mul__(self, scalar) -> "ComplexForm":
        return ComplexForm(self.re * scalar, self.im * scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __str__(self) -> str:
        return f"({self.re}) + i({self.im})"


@dataclass(frozen=True)
class RotationAngle:
    """Exact rational point on the circle, as (cos phi, sin phi).

    The doubled pair (cos 2phi, sin 2phi) is derived when the half
    pair is given; alternatively only the doubled pair may be
    supplied (via `from_double`), which is enough for `rotate` and
    `re_omega_split` but not for the SUSY coupling constants.
    """

    k_par: object | None = None   # cos(phi)
    k_perp: object | None = None  # sin(phi)
    cos2: object | None = None    # cos(2 phi)
    sin2: object | None = None    # sin(2 phi)

    def __post_init__(self):
        k_par, k_perp = self.k_par, self.k_perp
        cos2, sin2 = self.cos2, self.sin2
        if (k_par is None) != (k_perp is None):
            raise ValueError("supply both of (k_par, k_perp) or neither")
        if (cos2 is None) != (sin2 is None):
            raise ValueError("supply both of (cos2, sin2) or neither")
        if k_par is None and cos2 is None:
            raise ValueError("an angle needs at least one coordinate pair")
        if k_par is not None:
            k_par = as_scalar(Fraction(k_par) if isinstance(k_par, int)
                              else k_par)
            k_perp = as_scalar(Fraction(k_perp) if isinstance(k_perp, int)
                               else k_perp)
            if not scalar_is_zero(
                    as_scalar(k_par * k_par + k_perp * k_perp - 1)):
                raise ValueError(
                    f"(k_par, k_perp) = ({scalar_str(k_par)}, "
                    f"{scalar_str(k_perp)}) is not on the unit circle")
            derived_c = as_scalar(k_par * k_par - k_perp * k_perp)
            derived_s = as_scalar(2 * k_par * k_perp)
            if cos2 is not None and (
                    not scalar_is_zero(as_scalar(cos2 - derived_c))
                    or not scalar_is_zero(as_scalar(sin2 - derived_s))):
                raise ValueError(
                    "(cos2, sin2) inconsistent with (k_par, k_perp)")
            cos2, sin2 = derived_c, derived_s
            object.__setattr__(self, "k_par", k_par)
            object.__setattr__(self, "k_perp", k_perp)
        else:
            cos2 = as_scalar(Fraction(cos2) if isinstance(cos2, int)
                             else cos2)
            sin2 = as_scalar(Fraction(sin2) if isinstance(sin2, int)
                             else sin2)
        if not scalar_is_zero(as_scalar(cos2 * cos2 + sin2 * sin2 - 1)):
            raise ValueError(
                f"(cos2, sin2) = ({scalar_str(cos2)}, {scalar_str(sin2)}) "
                f"is not on the unit circle")
        object.__setattr__(self, "cos2", cos2)
        object.__setattr__(self, "sin2", sin2)

    @classmethod
    def from_double(cls, cos2, sin2) -> "RotationAngle":
        return cls(cos2=cos2, sin2=sin2)

    @property
    def intermediate(self) -> bool:
        """Both spinor components nonzero (the coupling k_par*k_perp != 0)."""
        if self.k_par is None:
            return False
        return (not scalar_is_zero(as_scalar(self.k_par))
                and not scalar_is_zero(as_scalar(self.k_perp)))

    def __str__(self) -> str:
        if self.k_par is not None:
            return (f"(k_par, k_perp) = ({scalar_str(self.k_par)}, "
                    f"{scalar_str(self.k_perp)})")
        return (f"(cos2, sin2) = ({scalar_str(self.cos2)}, "
                f"{scalar_str(self.sin2)})")


@dataclass(frozen=True)
class SU2Structure:
    """SU(2) structure data bound to a 6-dimensional Lie algebra."""

    algebra: LieAlgebra
    alpha: ComplexForm
    omega: Form
    omega_complex: ComplexForm

    def __post_init__(self):
        if self.algebra.dim != 6:
            raise ValueError("the ambient Lie algebra must be 6-dimensional")
        if self.alpha.dim != 6 or self.alpha.degree != 1:
            raise ValueError("alpha must be a complex 1-form in dimension 6")
        if self.omega.dim != 6 or self.omega.degree != 2:
            raise ValueError("omega must be a 2-form in dimension 6")
        if self.omega_complex.dim != 6 or self.omega_complex.degree != 2:
            raise ValueError(
                "the complex 2-form must have degree 2 in dimension 6")


@dataclass(frozen=True)
class SU3Embedding:
    """The SU(3) structure data induced by an SU(2) structure."""

    f: Form
    rho: Form
    rho_hat: Form

    @property
    def psi(self) -> ComplexForm:
        return ComplexForm(self.rho, self.rho_hat)


@dataclass(frozen=True)
class SusyData:
    """Inputs of the three type-IIA supersymmetry equations."""

    alpha: ComplexForm
    re_omega_par: Form
    re_omega_perp: Form
    im_omega: Form
    angle: RotationAngle

    def __post_init__(self):
        if self.alpha.degree != 1:
            raise ValueError("alpha must be a complex 1-form")
        for f in (self.re_omega_par, self.re_omega_perp, self.im_omega):
            if f.degree != 2 or f.dim != self.alpha.dim:
                raise ValueError(
                    "the split components must be 2-forms on the same space")


def embed_su3(s: SU2Structure) -> SU3Embedding:
    """The SU(3) structure induced by an SU(2) structure.

    F = omega + Re(alpha) ^ Im(alpha)  and  Psi = alpha ^ Omega, whose
    real part is the stable 3-form and imaginary part its partner.
    """
    f = s.omega + s.alpha.re.wedge(s.alpha.im)
    psi = s.alpha.wedge(s.omega_complex)
    return SU3Embedding(f=f, rho=psi.re, rho_hat=psi.im)


def _covector_coeffs(beta: Form) -> list:
    return [beta.coefficient((i,)) for i in range(1, beta.dim + 1)]


@dataclass(frozen=True)
class SU2Report:
    """Itemized verification of the SU(2) structure axioms."""

    algebra: str
    omega_sq_matches: bool
    omega_sq_nonzero: bool
    omega_wedge_zero: bool
    omega_complex_sq_zero: bool
    metric_available: bool
    alpha_contractions_zero: bool | None
    alpha_norm_sq_two: bool | None
    lambda_tilde: object | None
    norm_detail: str = ""

    @property
    def ok(self) -> bool:
        return (self.omega_sq_matches and self.omega_sq_nonzero
                and self.omega_wedge_zero and self.omega_complex_sq_zero
                and self.metric_available
                and bool(self.alpha_contractions_zero)
                and bool(self.alpha_norm_sq_two))

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "omega_sq_matches": self.omega_sq_matches,
            "omega_sq_nonzero": self.omega_sq_nonzero,
            "omega_wedge_zero": self.omega_wedge_zero,
            "omega_complex_sq_zero": self.omega_complex_sq_zero,
            "metric_available": self.metric_available,
            "alpha_contractions_zero": self.alpha_contractions_zero,
            "alpha_norm_sq_two": self.alpha_norm_sq_two,
            "lambda_tilde": (None if self.lambda_tilde is None
                             else scalar_str(self.lambda_tilde)),
            "norm_detail": self.norm_detail,
            "ok": self.ok,
        }

    def __str__(self) -> str:
        items = [
            ("omega^2 = (1/2) Omega ^ conj(Omega)", self.omega_sq_matches),
            ("omega^2 != 0", self.omega_sq_nonzero),
            ("omega ^ Omega = 0", self.omega_wedge_zero),
            ("Omega ^ Omega = 0", self.omega_complex_sq_zero),
            ("dual contractions vanish", self.alpha_contractions_zero),
            ("|alpha|^2 = 2", self.alpha_norm_sq_two),
        ]
        lines = [f"SU(2) axioms on {self.algebra}: "
                 f"{'pass' if self.ok else 'FAIL'}"]
        for label, val in items:
            mark = "?" if val is None else ("ok" if val else "FAIL")
            lines.append(f"  {label}: {mark}")
        if not self.metric_available:
            lines.append("  (induced metric unavailable; "
                         "metric-dependent checks skipped)")
        if self.norm_detail:
            lines.append(f"  norm detail: {self.norm_detail}")
        return "\n".join(lines)


def su2_axioms_check(s: SU2Structure) -> SU2Report:
    """Verify every defining condition of an SU(2) structure exactly.

    The wedge conditions are plain exterior algebra.  The dual-vector
    contractions and the norm of alpha use the metric induced by the
    embedded SU(3) structure.  When that metric is only known up to
    the positive factor c = sqrt(-lambda) (c irrational), the
    contraction checks are unaffected (scale-invariant) and the norm
    condition |alpha|^2 = 2 is decided through its rationalization
    (-lambda) * t^2 = 4 with t = alpha^T G^{-1} alpha > 0, where G is
    the scaled Gram matrix: both sides are exact rationals.
    """
    name = s.algebra.name or "(unnamed)"
    omega, oc = s.omega, s.omega_complex
    omega_sq = omega.wedge(omega)
    re_sq = oc.re.wedge(oc.re)
    im_sq = oc.im.wedge(oc.im)
    cross = oc.re.wedge(oc.im)
    omega_sq_matches = (omega_sq * Fraction(2) - re_sq - im_sq).is_zero()
    omega_sq_nonzero = not omega_sq.is_zero()
    omega_wedge_zero = (omega.wedge(oc.re).is_zero()
                        and omega.wedge(oc.im).is_zero())
    omega_complex_sq_zero = (re_sq - im_sq).is_zero() and cross.is_zero()

    embedding = embed_su3(s)
    metric_available = False
    contractions: bool | None = None
    norm_ok: bool | None = None
    lam = None
    norm_detail = ""
    try:
        metric = induced_metric(embedding.f, embedding.rho)
        lam = metric.lambda_tilde
        metric_available = metric.symmetric and bool(metric.positive_definite)
    except ValueError:
        metric_available = False
    if metric_available:
        re_coeffs = _covector_coeffs(s.alpha.re)
        im_coeffs = _covector_coeffs(s.alpha.im)
        x_re = solve(metric.gram, re_coeffs)
        x_im = solve(metric.gram, im_coeffs)
        if x_re is None or x_im is None:
            metric_available = False
        else:
            # scale-invariant: the dual vectors are used only in
            # zero-tests, so the unknown positive factor drops out
            contractions = (
                (oc.re.contract(x_re) - oc.im.contract(x_im)).is_zero()
                and (oc.im.contract(x_re) + oc.re.contract(x_im)).is_zero()
                and omega.contract(x_re).is_zero()
                and omega.contract(x_im).is_zero()
            )
            t_re = as_scalar(sum(c * x for c, x in zip(re_coeffs, x_re)))
            t_im = as_scalar(sum(c * x for c, x in zip(im_coeffs, x_im)))
            t = as_scalar(t_re + t_im)
            if metric.normalized:
                norm_ok = scalar_is_zero(as_scalar(t - 2))
                norm_detail = f"|alpha|^2 = {scalar_str(t)}"
            else:
                residual = as_scalar((-lam) * t * t - 4)
                norm_ok = (scalar_sign(t) > 0
                           and scalar_is_zero(residual))
                norm_detail = (
                    f"|alpha|^2 = sqrt({scalar_str(as_scalar(-lam))})"
                    f"*{scalar_str(t)} (exact rationalized check)")
    return SU2Report(
        algebra=name,
        omega_sq_matches=omega_sq_matches,
        omega_sq_nonzero=omega_sq_nonzero,
        omega_wedge_zero=omega_wedge_zero,
        omega_complex_sq_zero=omega_complex_sq_zero,
        metric_available=metric_available,
        alpha_contractions_zero=contractions,
        alpha_norm_sq_two=norm_ok,
        lambda_tilde=lam,
        norm_detail=norm_detail,
    )


def extract_su2(g: LieAlgebra, embedding: SU3Embedding,
                alpha: ComplexForm) -> SU2Structure:
    """Recover the SU(2) structure an SU(3) structure induces along alpha.

    omega = F - Re(alpha) ^ Im(alpha) and Omega is half the
    contraction of Psi by the metric dual of conj(alpha).  Requires
    |alpha|^2 = 2 exactly under the induced metric (which also makes
    the dual vectors exactly computable); inverse of `embed_su3`.
    """
    if alpha.degree != 1 or alpha.dim != 6:
        raise ValueError("alpha must be a complex 1-form in dimension 6")
    metric = induced_metric(embedding.f, embedding.rho)
    if not (metric.symmetric and metric.positive_definite):
        raise ValueError("the pair does not induce a positive metric")
    re_coeffs = _covector_coeffs(alpha.re)
    im_coeffs = _covector_coeffs(alpha.im)
    x_re = solve(metric.gram, re_coeffs)
    x_im = solve(metric.gram, im_coeffs)
    if x_re is None or x_im is None:
        raise ValueError("the induced metric is singular")
    t_re = as_scalar(sum(c * x for c, x in zip(re_coeffs, x_re)))
    t_im = as_scalar(sum(c * x for c, x in zip(im_coeffs, x_im)))
    t = as_scalar(t_re + t_im)
    if metric.normalized:
        if not scalar_is_zero(as_scalar(t - 2)):
            raise ValueError(
                f"|alpha|^2 = {scalar_str(t)} != 2 under the induced metric")
    else:
        lam = metric.lambda_tilde
        if not (scalar_sign(t) > 0
                and scalar_is_zero(as_scalar((-lam) * t * t - 4))):
            raise ValueError(
                f"|alpha|^2 = sqrt({scalar_str(as_scalar(-lam))})"
                f"*{scalar_str(t)} != 2 under the induced metric")
        raise ValueError(
            "the induced metric is known only up to an irrational factor; "
            "the dual contraction is not exactly representable")
    omega = embedding.f - alpha.re.wedge(alpha.im)
    # i_{conj(alpha)} Psi with conj(alpha) dual to X_re - i X_im
    half = Fraction(1, 2)
    oc_re = (embedding.rho.contract(x_re)
             + embedding.rho_hat.contract(x_im)) * half
    oc_im = (embedding.rho_hat.contract(x_re)
             - embedding.rho.contract(x_im)) * half
    return SU2Structure(algebra=g, alpha=alpha, omega=omega,
                        omega_complex=ComplexForm(oc_re, oc_im))


def rotate(s: SU2Structure, angle: RotationAngle) -> SU2Structure:
    """The spinor-pair rotation acting on an SU(2) structure.

    omega' = c*omega + s*Re(Omega) and
    Omega' = (-s*omega + c*Re(Omega)) + i*Im(Omega), with (c, s) the
    doubled angle; alpha is unchanged.
    """
    c, w = angle.cos2, angle.sin2
    omega_new = s.omega * c + s.omega_complex.re * w
    oc_new = ComplexForm(
        -(s.omega * w) + s.omega_complex.re * c,
        s.omega_complex.im,
    )
    return SU2Structure(algebra=s.algebra, alpha=s.alpha,
                        omega=omega_new, omega_complex=oc_new)


def re_omega_split(omega: Form, re_omega: Form,
                   angle: RotationAngle) -> tuple[Form, Form]:
    """Split Re(Omega) into rotation-parallel and -perpendicular parts.

    parallel = ((1 - c) Re(Omega) + s omega)/2 and
    perpendicular = ((1 + c) Re(Omega) - s omega)/2; they always sum
    back to Re(Omega).
    """
    c, w = angle.cos2, angle.sin2
    half = Fraction(1, 2)
    par = (re_omega * (1 - c) + omega * w) * half
    perp = (re_omega * (1 + c) - omega * w) * half
    return par, perp


@dataclass(frozen=True)
class SusyReport:
    """Itemized residuals of the three type-IIA SUSY equations."""

    algebra: str
    eq_alpha_closed: bool
    eq_perp_coupled: bool
    eq_im_sourced: bool
    residuals: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (self.eq_alpha_closed and self.eq_perp_coupled
                and self.eq_im_sourced)

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "d_re_alpha_zero": self.eq_alpha_closed,
            "d_re_omega_perp_coupled": self.eq_perp_coupled,
            "d_im_omega_sourced": self.eq_im_sourced,
            "residuals": list(self.residuals),
            "ok": self.ok,
        }

    def __str__(self) -> str:
        lines = [f"type-IIA SUSY equations on {self.algebra}: "
                 f"{'pass' if self.ok else 'FAIL'}"]
        lines.append(f"  d Re(alpha) = 0: "
                     f"{'ok' if self.eq_alpha_closed else 'FAIL'}")
        lines.append(f"  d Re(Omega)_perp = k_par k_perp Re(alpha) ^ "
                     f"d Im(alpha): {'ok' if self.eq_perp_coupled else 'FAIL'}")
        lines.append(f"  d Im(Omega) ^ Re(alpha) = -d(Im(alpha) ^ "
                     f"Re(Omega)_par): {'ok' if self.eq_im_sourced else 'FAIL'}")
        for r in self.residuals:
            lines.append(f"  residual: {r}")
        return "\n".join(lines)


def susy_check(data: SusyData, g: LieAlgebra) -> SusyReport:
    """Verify the three type-IIA SUSY equations exactly.

    Requires an intermediate angle: the coupling constant
    k_par * k_perp enters the second equation.
    """
    if not data.angle.intermediate:
        raise ValueError(
            "the SUSY equations require an intermediate angle "
            "(k_par and k_perp both nonzero)")
    name = g.name or "(unnamed)"
    k = as_scalar(data.angle.k_par * data.angle.k_perp)
    d_re_alpha = g.differential(data.alpha.re)
    d_im_alpha = g.differential(data.alpha.im)
    eq1 = d_re_alpha.is_zero()
    res2 = (g.differential(data.re_omega_perp)
            - data.alpha.re.wedge(d_im_alpha) * k)
    eq2 = res2.is_zero()
    res3 = (g.differential(data.im_omega).wedge(data.alpha.re)
            + g.differential(data.alpha.im.wedge(data.re_omega_par)))
    eq3 = res3.is_zero()
    residuals = []
    if not eq1:
        residuals.append(f"d Re(alpha) = {d_re_alpha}")
    if not eq2:
        residuals.append(f"second equation residual = {res2}")
    if not eq3:
        residuals.append(f"third equation residual = {res3}")
    return SusyReport(algebra=name, eq_alpha_closed=eq1,
                      eq_perp_coupled=eq2, eq_im_sourced=eq3,
                      residuals=tuple(residuals))


def from_shf(s: SU2Structure, angle: RotationAngle,
             report: StructureReport | None = None) -> SusyData:
    """Build SUSY-equation data from a symplectic half-flat SU(2) structure.

    Inverts the correspondence
        Re(Omega)_perp / k_perp = omega,
        Im(Omega) - i Re(Omega)_par / k_par = Omega,
        Re(alpha) + i k_par Im(alpha) = alpha
    (right-hand sides: the given half-flat structure), so

        Re(Omega)_perp = k_perp * omega,
        Im(Omega) = Re(Omega),  Re(Omega)_par = -k_par * Im(Omega),
        Re(alpha) unchanged,    Im(alpha) scaled by 1/k_par.

    Preconditions: the embedded SU(3) structure is symplectic
    half-flat, d Re(alpha) = 0, and the angle is intermediate.
    """
    if not angle.intermediate:
        raise ValueError("the construction needs an intermediate angle")
    g = s.algebra
    if report is None:
        embedding = embed_su3(s)
        report = shf_check(g, embedding.f, embedding.rho)
    if not report.overall:
        raise ValueError(
            f"the embedded SU(3) structure is not symplectic half-flat:\n"
            f"{report}")
    if not g.differential(s.alpha.re).is_zero():
        raise ValueError("Re(alpha) must be closed for the construction")
    k_par, k_perp = angle.k_par, angle.k_perp
    alpha = ComplexForm(s.alpha.re, s.alpha.im / k_par)
    return SusyData(
        alpha=alpha,
        re_omega_par=-(s.omega_complex.im * k_par),
        re_omega_perp=s.omega * k_perp,
        im_omega=s.omega_complex.re,
        angle=angle,
    )

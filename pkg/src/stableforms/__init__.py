"""Exact verification engine for symplectic half-flat structures.

Everything is computed over exact scalars (rationals, quadratic
extensions, sparse polynomials): structure equations of solvable Lie
algebras, stable 3-forms and their invariants, non-existence
certificates, SU(2)-based constructions, and the bundled catalog of
six-dimensional examples.
"""

from .catalog import (
    BoundEntry,
    CatalogEntry,
    CatalogError,
    CatalogReport,
    ClassifyConfig,
    EntryReport,
    RangeError,
    UnknownEntryError,
    classify,
    classify_all,
    classify_samples,
    instantiate,
    load_catalog,
    resolve_entry,
)
from .forms import Form, basis_monomials, sort_with_sign, standard_volume
from .hitchin import (
    DualMaps,
    G2Extension,
    MetricResult,
    StructureReport,
    dual_map,
    g2_form,
    induced_metric,
    k_endomorphism,
    kappa_vector,
    lambda_invariant,
    shf_check,
)
from .lie import ClosedFormBasis, JacobiReport, LieAlgebra, direct_sum
from .obstructions import (
    Certificate,
    certify_contraction_cube,
    certify_isotropic_covector,
    certify_sign_pair,
    search_witness,
    sign_quantity,
)
from .parsing import (
    ParseError,
    parse_form,
    parse_scalar,
    parse_structure_equations,
    parse_vector,
)
from .scalars import Poly, QuadExt, ScalarContextError
from .su2 import (
    ComplexForm,
    RotationAngle,
    SU2Report,
    SU2Structure,
    SU3Embedding,
    SusyData,
    SusyReport,
    embed_su3,
    extract_su2,
    from_shf,
    rotate,
    su2_axioms_check,
    susy_check,
)

__all__ = [
    "BoundEntry",
    "CatalogEntry",
    "CatalogError",
    "CatalogReport",
    "Certificate",
    "ClassifyConfig",
    "ClosedFormBasis",
    "ComplexForm",
    "DualMaps",
    "EntryReport",
    "Form",
    "G2Extension",
    "JacobiReport",
    "LieAlgebra",
    "MetricResult",
    "ParseError",
    "Poly",
    "QuadExt",
    "RangeError",
    "RotationAngle",
    "SU2Report",
    "SU2Structure",
    "SU3Embedding",
    "ScalarContextError",
    "StructureReport",
    "SusyData",
    "SusyReport",
    "UnknownEntryError",
    "basis_monomials",
    "certify_contraction_cube",
    "certify_isotropic_covector",
    "certify_sign_pair",
    "classify",
    "classify_all",
    "classify_samples",
    "direct_sum",
    "dual_map",
    "embed_su3",
    "extract_su2",
    "from_shf",
    "g2_form",
    "induced_metric",
    "instantiate",
    "k_endomorphism",
    "kappa_vector",
    "lambda_invariant",
    "load_catalog",
    "parse_form",
    "parse_scalar",
    "parse_structure_equations",
    "parse_vector",
    "resolve_entry",
    "rotate",
    "search_witness",
    "shf_check",
    "sign_quantity",
    "sort_with_sign",
    "standard_volume",
    "su2_axioms_check",
    "susy_check",
]

__version__ = "0.1.0"

"""Bundled catalog of six-dimensional solvable Lie algebras.

The data file ``data/catalog.json`` is the single source of truth: one
record per algebra or parameter family, carrying the structure
equations, parameter range, the expected verdict ("yes" = admits a
symplectic half-flat pair, "no" = provably does not), an explicit
witness pair and/or SU(2) construction data for the yes-entries, and a
non-existence hint (the certificate kind plus its witness covector or
vector) for the no-entries.

``classify`` replays one entry at one parameter point: it instantiates
the structure equations, re-verifies the witness or re-certifies the
obstruction from scratch, and compares the outcome with the expected
verdict.  ``classify_all`` sweeps the whole catalog over every stored
parameter sample; zero mismatches reproduces the full classification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .forms import Form
from .hitchin import g2_form, shf_check
from .lie import LieAlgebra
from .obstructions import (
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    Certificate,
    certify_contraction_cube,
    certify_isotropic_covector,
    certify_sign_pair,
    search_witness,
)
from .parsing import parse_form, parse_structure_equations, parse_vector
from .su2 import ComplexForm, SU2Structure, embed_su3

DATA_PATH = Path(__file__).resolve().parent / "data" / "catalog.json"

EXPECTED_COUNTS = {
    "table-1": 14,
    "table-2": 17,
    "table-3": 27,
    "table-4": 9,
    "table-5": 4,
    "table-6": 12,
    "nilpotent": 2,
}

OBSTRUCTION_KINDS = ("P21-i", "P21-ii-zero", "P21-ii-antisym", "P22")
DECOMPOSITIONS = ("indecomposable", "3+3", "4+2", "5+1")
VERDICTS = ("yes", "no")


class CatalogError(ValueError):
    """Malformed catalog data, identified by entry name where possible."""


class UnknownEntryError(KeyError):
    """A name that resolves to no catalog entry."""


class RangeError(ValueError):
    """A parameter assignment outside an entry's declared range."""


def _eval_predicate(expr: str, assignment: Mapping[str, Fraction]) -> bool:
    """Evaluate a range or case guard like ``0 < a < 2`` on rationals."""
    env = dict(assignment)
    try:
        value = eval(expr, {"__builtins__": {}}, env)  # noqa: S307
    except Exception as e:  # pragma: no cover - data errors
        raise CatalogError(f"cannot evaluate predicate {expr!r}: {e}") from e
    if not isinstance(value, bool):
        raise CatalogError(f"predicate {expr!r} is not boolean")
    return value


@dataclass(frozen=True)
class HintCase:
    """One branch of an obstruction hint, guarded by a predicate."""

    witness: object  # str, or (str, str) for vector pairs
    when: str = ""

    def applies(self, assignment: Mapping[str, Fraction]) -> bool:
        return not self.when or _eval_predicate(self.when, assignment)


@dataclass(frozen=True)
class ObstructionHint:
    """Certificate kind plus the witness data from the source argument."""

    kind: str
    cases: tuple[HintCase, ...]

    def select(self, assignment: Mapping[str, Fraction]) -> HintCase:
        for case in self.cases:
            if case.applies(assignment):
                return case
        raise CatalogError(
            f"no hint case applies to assignment {dict(assignment)!r}")


@dataclass(frozen=True)
class WitnessData:
    """Textual (f, rho) pair, possibly with free parameters."""

    f: str
    rho: str


@dataclass(frozen=True)
class SU2Data:
    """Textual SU(2) structure data (alpha, omega, complex 2-form)."""

    alpha_re: str
    alpha_im: str
    omega: str
    omega_re: str
    omega_im: str


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog record: a single algebra or a parameter family."""

    name: str
    source: str
    equations: str
    parameters: tuple[str, ...]
    constraint: str
    samples: tuple[dict, ...]
    verdict: str
    decomposition: str
    unimodular: bool
    witness: WitnessData | None = None
    obstruction: ObstructionHint | None = None
    su2: SU2Data | None = None
    notes: str = ""

    @property
    def is_family(self) -> bool:
        return bool(self.parameters)

    def sample_points(self) -> tuple[dict, ...]:
        """Stored parameter samples (a single empty point if no params)."""
        return self.samples if self.parameters else ({},)


def _parse_fraction(text, where: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as e:
        raise CatalogError(f"{where}: bad rational {text!r}") from e


def _load_hint(rec: dict, name: str) -> ObstructionHint:
    kind = rec.get("kind")
    if kind not in OBSTRUCTION_KINDS:
        raise CatalogError(f"entry {name!r}: unknown obstruction kind "
                           f"{kind!r}")
    raw_cases = rec.get("cases")
    if not raw_cases:
        raise CatalogError(f"entry {name!r}: obstruction without cases")
    cases = []
    for c in raw_cases:
        witness = c.get("witness")
        if kind == "P21-ii-antisym":
            if (not isinstance(witness, list) or len(witness) != 2
                    or not all(isinstance(w, str) for w in witness)):
                raise CatalogError(f"entry {name!r}: a vector-pair hint "
                                   "needs two vector strings")
            witness = tuple(witness)
        elif not isinstance(witness, str):
            raise CatalogError(f"entry {name!r}: hint witness must be text")
        cases.append(HintCase(witness=witness, when=c.get("when", "")))
    return ObstructionHint(kind=kind, cases=tuple(cases))


def _load_entry(rec: dict) -> CatalogEntry:
    name = rec.get("name")
    if not isinstance(name, str) or not name:
        raise CatalogError(f"record without a usable name: {rec!r}")
    where = f"entry {name!r}"

    source = rec.get("source")
    if source not in EXPECTED_COUNTS:
        raise CatalogError(f"{where}: unknown source tag {source!r}")
    verdict = rec.get("verdict")
    if verdict not in VERDICTS:
        raise CatalogError(f"{where}: verdict must be 'yes' or 'no'")
    decomposition = rec.get("decomposition")
    if decomposition not in DECOMPOSITIONS:
        raise CatalogError(f"{where}: unknown decomposition tag "
                           f"{decomposition!r}")
    unimodular = rec.get("unimodular")
    if not isinstance(unimodular, bool):
        raise CatalogError(f"{where}: unimodular tag must be boolean")
    equations = rec.get("equations")
    if not isinstance(equations, str):
        raise CatalogError(f"{where}: missing structure equations")

    parameters = tuple(rec.get("parameters", ()))
    if not all(isinstance(p, str) and p.isidentifier() for p in parameters):
        raise CatalogError(f"{where}: parameter names must be identifiers")

    samples = []
    for raw in rec.get("samples", ({},)):
        if set(raw) != set(parameters):
            raise CatalogError(f"{where}: sample {raw!r} does not assign "
                               f"exactly the parameters {parameters!r}")
        samples.append({k: _parse_fraction(v, where)
                        for k, v in raw.items()})
    if parameters and len(samples) < 2:
        raise CatalogError(f"{where}: a family needs several stored samples")

    witness = None
    if "witness" in rec:
        w = rec["witness"]
        if not isinstance(w.get("f"), str) or not isinstance(
                w.get("rho"), str):
            raise CatalogError(f"{where}: witness needs 'f' and 'rho' text")
        witness = WitnessData(f=w["f"], rho=w["rho"])

    su2 = None
    if "su2" in rec:
        s = rec["su2"]
        keys = ("alpha_re", "alpha_im", "omega", "omega_re", "omega_im")
        if not all(isinstance(s.get(k), str) for k in keys):
            raise CatalogError(f"{where}: su2 record needs the five form "
                               "fields as text")
        su2 = SU2Data(**{k: s[k] for k in keys})

    obstruction = None
    if "obstruction" in rec:
        obstruction = _load_hint(rec["obstruction"], name)

    if verdict == "yes" and witness is None and su2 is None:
        raise CatalogError(f"{where}: a yes-entry needs a witness or su2 "
                           "construction data")
    if verdict == "no" and obstruction is None:
        raise CatalogError(f"{where}: a no-entry needs an obstruction hint")

    return CatalogEntry(
        name=name,
        source=source,
        equations=equations,
        parameters=parameters,
        constraint=rec.get("constraint", ""),
        samples=tuple(samples),
        verdict=verdict,
        decomposition=decomposition,
        unimodular=unimodular,
        witness=witness,
        obstruction=obstruction,
        su2=su2,
        notes=rec.get("notes", ""),
    )


def load_document(path=None) -> dict:
    """Load and minimally shape-check the raw catalog document."""
    p = Path(path) if path is not None else DATA_PATH
    if not p.is_file():
        raise CatalogError(f"catalog file not found: {p}")
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise CatalogError(f"catalog file {p} is not valid JSON: {e}") from e
    if doc.get("schema") != 1:
        raise CatalogError("unsupported catalog schema "
                           f"{doc.get('schema')!r}")
    if not isinstance(doc.get("entries"), list):
        raise CatalogError("catalog document has no entry list")
    return doc


def load_catalog(path=None) -> list[CatalogEntry]:
    """Parse the catalog file into validated entries, counts enforced."""
    doc = load_document(path)
    entries = [_load_entry(rec) for rec in doc["entries"]]

    seen = set()
    for e in entries:
        if e.name in seen:
            raise CatalogError(f"duplicate entry name {e.name!r}")
        seen.add(e.name)

    counts: dict[str, int] = {}
    for e in entries:
        counts[e.source] = counts.get(e.source, 0) + 1
    if counts != EXPECTED_COUNTS:
        raise CatalogError(
            f"catalog group counts {counts} differ from the expected "
            f"{EXPECTED_COUNTS}")
    return entries


def catalog_annotations(path=None) -> dict:
    """Free-form data-quality notes, keyed by source group."""
    return load_document(path).get("annotations", {})


_NAME_MAP = {
    "α": "a", "β": "b", "γ": "c", "ε": "e", "⊕": "+", "ℝ": "R",
    "−": "-", "–": "-", "±": "s",
    "₀": "0", "₁": "1", "₂": "2", "₃": "3", "₄": "4",
    "₅": "5", "₆": "6", "₇": "7", "₈": "8", "₉": "9",
    "⁰": "0", "¹": "1", "²": "2", "³": "3", "⁴": "4",
    "⁵": "5", "⁶": "6", "⁷": "7", "⁸": "8", "⁹": "9",
    "⁺": "+", "⁻": "-",
}
_NAME_TRANSLATION = str.maketrans(_NAME_MAP)


def canonical_name(text: str) -> str:
    """Normalize an entry name for lookup (drop braces, map aliases)."""
    out = text.translate(_NAME_TRANSLATION)
    for ch in " {}":
        out = out.replace(ch, "")
    return out


def resolve_entry(entries: Sequence[CatalogEntry],
                  name: str) -> CatalogEntry:
    """Find an entry by exact or canonicalized name."""
    for e in entries:
        if e.name == name:
            return e
    wanted = canonical_name(name)
    matches = [e for e in entries if canonical_name(e.name) == wanted]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise UnknownEntryError(f"no catalog entry named {name!r}")
    raise UnknownEntryError(  # pragma: no cover - names are unique
        f"ambiguous name {name!r}: " + ", ".join(e.name for e in matches))


# --------------------------------------------------------------------------
# instantiation


@dataclass(frozen=True)
class BoundEntry:
    """An entry pinned to one parameter point, with parsed data."""

    entry: CatalogEntry
    assignment: dict
    algebra: LieAlgebra
    f: Form | None
    rho: Form | None
    su2: SU2Structure | None

    @property
    def label(self) -> str:
        return self.algebra.name


def _format_label(entry: CatalogEntry,
                  assignment: Mapping[str, Fraction]) -> str:
    if not entry.parameters:
        return entry.name
    inner = ", ".join(f"{p}={assignment[p]}" for p in entry.parameters)
    return f"{entry.name} [{inner}]"


def _coerce_assignment(entry: CatalogEntry, assignment) -> dict:
    assignment = dict(assignment or {})
    coerced = {}
    for key, value in assignment.items():
        coerced[key] = (value if isinstance(value, Fraction)
                        else Fraction(str(value)))
    missing = [p for p in entry.parameters if p not in coerced]
    extra = [k for k in coerced if k not in entry.parameters]
    if missing:
        raise RangeError(f"{entry.name}: missing parameter values for "
                         + ", ".join(missing))
    if extra:
        raise RangeError(f"{entry.name}: unknown parameters "
                         + ", ".join(sorted(extra)))
    return coerced


def _parse_entry_form(entry: CatalogEntry, text: str, degree: int,
                      assignment: Mapping[str, Fraction]) -> Form:
    form = parse_form(text, 6, degree, params=entry.parameters)
    if entry.parameters:
        form = form.substitute(dict(assignment))
    return form


def instantiate(entry: CatalogEntry, assignment=None) -> BoundEntry:
    """Bind a catalog entry to one parameter point.

    Raises RangeError when the assignment misses parameters or violates
    the declared range constraint.
    """
    coerced = _coerce_assignment(entry, assignment)
    if entry.constraint and not _eval_predicate(entry.constraint, coerced):
        shown = {k: str(v) for k, v in coerced.items()}
        raise RangeError(
            f"{entry.name}: assignment {shown} violates the declared "
            f"range {entry.constraint!r}")

    label = _format_label(entry, coerced)
    algebra = parse_structure_equations(entry.equations,
                                        params=entry.parameters, name=label)
    if entry.parameters:
        algebra = algebra.substitute(coerced)

    f = rho = None
    if entry.witness is not None:
        f = _parse_entry_form(entry, entry.witness.f, 2, coerced)
        rho = _parse_entry_form(entry, entry.witness.rho, 3, coerced)

    su2 = None
    if entry.su2 is not None:
        alpha = ComplexForm(
            _parse_entry_form(entry, entry.su2.alpha_re, 1, coerced),
            _parse_entry_form(entry, entry.su2.alpha_im, 1, coerced))
        omega_c = ComplexForm(
            _parse_entry_form(entry, entry.su2.omega_re, 2, coerced),
            _parse_entry_form(entry, entry.su2.omega_im, 2, coerced))
        omega = _parse_entry_form(entry, entry.su2.omega, 2, coerced)
        su2 = SU2Structure(algebra=algebra, alpha=alpha, omega=omega,
                           omega_complex=omega_c)

    if f is None and su2 is not None:
        emb = embed_su3(su2)
        f, rho = emb.f, emb.rho

    return BoundEntry(entry=entry, assignment=coerced, algebra=algebra,
                      f=f, rho=rho, su2=su2)


# --------------------------------------------------------------------------
# classification driver


@dataclass(frozen=True)
class ClassifyConfig:
    """Knobs for the certificate machinery used during replay."""

    mode: str = "randomized"  # or "exact"
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    sample_size: int = DEFAULT_SAMPLE_SIZE
    field: str | None = None  # "sqrt3" widens the fallback search grid
    search_budget: int = 400


@dataclass(frozen=True)
class EntryReport:
    """Outcome of replaying one entry at one parameter point."""

    name: str
    assignment: dict
    expected: str
    observed: str
    ok: bool
    jacobi_ok: bool
    unimodular_expected: bool
    unimodular_observed: bool
    structure: dict | None = None
    g2_closed: bool | None = None
    certificate: dict | None = None
    detail: str = ""

    @property
    def label(self) -> str:
        if not self.assignment:
            return self.name
        inner = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"{self.name} [{inner}]"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "assignment": {k: str(v) for k, v in self.assignment.items()},
            "expected": self.expected,
            "observed": self.observed,
            "ok": self.ok,
            "jacobi_ok": self.jacobi_ok,
            "unimodular_expected": self.unimodular_expected,
            "unimodular_observed": self.unimodular_observed,
            "structure": self.structure,
            "g2_closed": self.g2_closed,
            "certificate": self.certificate,
            "detail": self.detail,
        }

    def __str__(self) -> str:
        mark = "ok" if self.ok else "MISMATCH"
        out = (f"{self.label}: expected {self.expected}, observed "
               f"{self.observed} [{mark}]")
        if self.detail:
            out += f" -- {self.detail}"
        return out


def dispatch_certificate(hint: ObstructionHint, case: HintCase,
                          algebra: LieAlgebra,
                          config: ClassifyConfig) -> Certificate:
    if hint.kind == "P21-i":
        alpha = parse_form(case.witness, 6, 1)
        return certify_isotropic_covector(
            algebra, alpha, mode=config.mode, trials=config.trials,
            seed=config.seed, sample_size=config.sample_size)
    if hint.kind == "P21-ii-zero":
        x = parse_vector(case.witness, 6)
        return certify_sign_pair(
            algebra, x, mode=config.mode, trials=config.trials,
            seed=config.seed, sample_size=config.sample_size)
    if hint.kind == "P21-ii-antisym":
        x = parse_vector(case.witness[0], 6)
        y = parse_vector(case.witness[1], 6)
        return certify_sign_pair(
            algebra, x, y, mode=config.mode, trials=config.trials,
            seed=config.seed, sample_size=config.sample_size)
    if hint.kind == "P22":
        x = parse_vector(case.witness, 6)
        return certify_contraction_cube(algebra, x)
    raise CatalogError(f"unknown obstruction kind {hint.kind!r}")


def classify(entry: CatalogEntry, assignment=None,
             config: ClassifyConfig | None = None) -> EntryReport:
    """Replay one entry at one parameter point and compare verdicts."""
    config = config or ClassifyConfig()
    bound = instantiate(entry, assignment)
    algebra = bound.algebra

    jacobi_ok = algebra.jacobi_report().ok
    unimodular_observed = algebra.is_unimodular()

    structure = None
    g2_closed = None
    certificate = None
    details = []

    if not jacobi_ok:
        details.append("structure equations fail the Jacobi identity")
    if unimodular_observed != entry.unimodular:
        details.append(
            f"unimodularity is {unimodular_observed}, catalog expects "
            f"{entry.unimodular}")

    if entry.verdict == "yes":
        report = shf_check(algebra, bound.f, bound.rho)
        structure = report.as_dict()
        if report.overall:
            extension = g2_form(algebra, bound.f, bound.rho, check=False)
            g2_closed = extension.closed
            if not g2_closed:
                details.append("the 7-dimensional extension 3-form is "
                               "not closed")
        else:
            failed = [k for k, v in structure.items()
                      if isinstance(v, bool) and not v and k != "overall"]
            details.append("witness fails: " + ", ".join(failed))
        observed = "yes" if report.overall and g2_closed else "undecided"
    else:
        if entry.obstruction is not None:
            case = entry.obstruction.select(bound.assignment)
            cert = dispatch_certificate(entry.obstruction, case, algebra,
                                         config)
        else:
            cert = search_witness(
                algebra, field=config.field, budget=config.search_budget,
                mode=config.mode, trials=config.trials, seed=config.seed,
                sample_size=config.sample_size)
        if cert is None:
            observed = "undecided"
            details.append("no stored hint and the witness search found "
                           "nothing")
        else:
            certificate = cert.as_dict()
            observed = "no" if cert.certified else "undecided"
            if not cert.certified:
                details.append(
                    f"stored hint did not certify: {cert.verdict}"
                    + (f" ({cert.detail})" if cert.detail else ""))

    ok = (jacobi_ok and unimodular_observed == entry.unimodular
          and observed == entry.verdict)
    return EntryReport(
        name=entry.name,
        assignment=bound.assignment,
        expected=entry.verdict,
        observed=observed,
        ok=ok,
        jacobi_ok=jacobi_ok,
        unimodular_expected=entry.unimodular,
        unimodular_observed=unimodular_observed,
        structure=structure,
        g2_closed=g2_closed,
        certificate=certificate,
        detail="; ".join(details),
    )


def classify_samples(entry: CatalogEntry,
                     config: ClassifyConfig | None = None
                     ) -> list[EntryReport]:
    """Replay one entry at every stored parameter sample."""
    return [classify(entry, point, config)
            for point in entry.sample_points()]


@dataclass(frozen=True)
class CatalogReport:
    """All per-point reports of a catalog sweep, in catalog order."""

    reports: tuple[EntryReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def mismatches(self) -> tuple[EntryReport, ...]:
        return tuple(r for r in self.reports if not r.ok)

    def as_dict(self) -> dict:
        return {
            "points": len(self.reports),
            "mismatches": len(self.mismatches),
            "ok": self.ok,
            "reports": [r.as_dict() for r in self.reports],
        }

    def summary_lines(self) -> list[str]:
        lines = [str(r) for r in self.reports]
        lines.append(f"checked {len(self.reports)} instantiations: "
                     f"{len(self.mismatches)} mismatches")
        return lines


def classify_all(entries: Sequence[CatalogEntry] | None = None,
                 config: ClassifyConfig | None = None) -> CatalogReport:
    """Sweep the whole catalog; the expected outcome is zero mismatches."""
    if entries is None:
        entries = load_catalog()
    reports = []
    for entry in entries:
        reports.extend(classify_samples(entry, config))
    return CatalogReport(reports=tuple(reports))


def fallback_search(entry: CatalogEntry, assignment=None,
                    config: ClassifyConfig | None = None):
    """Scan for an obstruction witness when no stored hint is wanted.

    Returns the first certificate found, or None.  This is the manual
    escape hatch mirroring the automatic hints; it never overrides a
    stored hint during classify.
    """
    config = config or ClassifyConfig()
    bound = instantiate(entry, assignment)
    return search_witness(bound.algebra, field=config.field,
                          budget=config.search_budget, mode=config.mode,
                          trials=config.trials, seed=config.seed,
                          sample_size=config.sample_size)

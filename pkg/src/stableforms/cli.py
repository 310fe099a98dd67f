"""Command-line front-end for the verification engine.

Subcommands
-----------
parse      parse structure equations (or a catalog entry) and report the
           Jacobi check, unimodularity, and closed-form dimensions
verify     re-verify a symplectic half-flat witness pair exactly
obstruct   re-establish a non-existence certificate (stored hint,
           explicit witness data, or automated search)
classify   replay stored verdicts against fresh computation; --all
           sweeps the whole catalog
susy       run the SU(2)-based type-IIA construction end to end
report     inventory of the bundled catalog (no computation)

Every command first builds a JSON-serializable record and then renders
either that record (``--format json``) or a human-readable view derived
from the same data (``--format text``).  With a fixed input, config,
and seed the JSON output is byte-identical across runs: all randomness
flows from the single seed through per-trial substreams, and the
serializer is deterministic (sorted keys, fixed separators).

Exit codes: 0 success, 1 verification failure or verdict mismatch,
2 unknown catalog entry, 3 unparsable input, 4 configuration error.
JSON goes to stdout; diagnostics go to stderr.

The catalog path is resolved in order: ``--catalog`` flag, the
``STABLEFORMS_CATALOG`` environment variable, then the bundled file.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .catalog import (
    CatalogEntry,
    CatalogError,
    ClassifyConfig,
    RangeError,
    UnknownEntryError,
    catalog_annotations,
    classify,
    classify_all,
    dispatch_certificate,
    instantiate,
    load_catalog,
    resolve_entry,
)
from .hitchin import shf_check
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
from .parsing import ParseError, parse_form, parse_structure_equations, \
    parse_vector
from .su2 import RotationAngle, embed_su3, from_shf, su2_axioms_check, \
    susy_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_PARSE = 3
EXIT_CONFIG = 4

# The randomized identity driver evaluates polynomials of degree at
# most 2*r + 2 where r counts the free closed-2-form coefficients
# (at most 15 in dimension 6), so any sample set of size >= 64 keeps
# the per-trial failure probability below 1/2.
MIN_SAMPLE_SIZE = 64

SCHEMA_VERSION = 1


class ConfigError(ValueError):
    """A command-line option combination the engine cannot run."""


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by every subcommand."""

    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    sample_size: int = DEFAULT_SAMPLE_SIZE
    field: str | None = None      # "sqrt3" enables the quadratic extension
    exact: bool = False           # full symbolic certificates, no sampling
    fmt: str = "text"             # "text" | "json"
    params: dict = dataclasses.field(default_factory=dict)
    catalog_path: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError("--trials must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("--seed must fit in 64 bits")
        if self.sample_size < MIN_SAMPLE_SIZE:
            raise ConfigError(
                f"--samples must be at least {MIN_SAMPLE_SIZE} (twice the "
                "largest polynomial degree the identity driver produces)")
        if self.field not in (None, "sqrt3"):
            raise ConfigError(
                f"unsupported scalar extension {self.field!r}; the only "
                "available extension is 'sqrt3'")
        if self.fmt not in ("text", "json"):
            raise ConfigError(f"unsupported output format {self.fmt!r}")

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "randomized"

    def classify_config(self) -> ClassifyConfig:
        return ClassifyConfig(mode=self.mode, trials=self.trials,
                              seed=self.seed, sample_size=self.sample_size,
                              field=self.field)

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "sample_size": self.sample_size,
            "field": self.field,
            "mode": self.mode,
        }


# --------------------------------------------------------------------------
# plumbing


def _emit(record: dict, text_lines: list[str], config: RunConfig) -> None:
    if config.fmt == "json":
        sys.stdout.write(render_json(record))
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def render_json(record: dict) -> str:
    """Deterministic serialization: one record, sorted keys."""
    return json.dumps(record, sort_keys=True, indent=1, ensure_ascii=False,
                      separators=(",", ": "))


def _diag(message: str) -> None:
    sys.stderr.write(message + "\n")


def _catalog_path(config: RunConfig) -> str | None:
    if config.catalog_path:
        return config.catalog_path
    return os.environ.get("STABLEFORMS_CATALOG") or None


def _load_entries(config: RunConfig) -> list[CatalogEntry]:
    return load_catalog(_catalog_path(config))


def _entry_points(entry: CatalogEntry, config: RunConfig) -> list[dict]:
    """Parameter points to run: the --param assignment, or all samples."""
    if config.params:
        return [dict(config.params)]
    return [dict(p) for p in entry.sample_points()]


def _parse_params(pairs: list[str]) -> dict:
    out = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise ConfigError(
                f"--param expects NAME=VALUE, got {pair!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigError(
                f"--param {name.strip()}: {value.strip()!r} is not an "
                f"exact rational ({e})") from e
    return out


def _parse_fraction_flag(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(
            f"{flag} expects an exact rational such as 3/5, got "
            f"{text!r}") from e


def _custom_algebra(equations: str) -> LieAlgebra:
    g = parse_structure_equations(equations, name="custom")
    report = g.jacobi_report()
    if not report.ok:
        raise ConfigError(
            f"the structure equations violate the Jacobi identity: {report}")
    return g


# --------------------------------------------------------------------------
# parse


def cmd_parse(args: argparse.Namespace, config: RunConfig) -> int:
    if args.equations:
        g = parse_structure_equations(args.equations, name="custom")
        assignment = {}
    else:
        entries = _load_entries(config)
        entry = resolve_entry(entries, args.name)
        points = _entry_points(entry, config)
        bound = instantiate(entry, points[0])
        g, assignment = bound.algebra, bound.assignment

    jac = g.jacobi_report()
    closed2 = g.closed_forms(2)
    closed3 = g.closed_forms(3)
    record = {
        "schema": SCHEMA_VERSION,
        "command": "parse",
        "config": config.as_dict(),
        "algebra": g.name,
        "assignment": {k: str(v) for k, v in assignment.items()},
        "equations": [str(d) for d in g.differentials],
        "jacobi_ok": jac.ok,
        "jacobi_failures": [f"d2(e{k}) = {f}" for k, f in jac.failures],
        "unimodular": g.is_unimodular(),
        "dim_closed_2_forms": len(closed2),
        "dim_closed_3_forms": len(closed3),
        "ok": jac.ok,
    }
    lines = [f"algebra {g.name}"]
    for i, d in enumerate(record["equations"], start=1):
        lines.append(f"  d e{i} = {d}")
    lines.append(f"  Jacobi identity: {'ok' if jac.ok else 'FAIL'}")
    for failure in record["jacobi_failures"]:
        lines.append(f"    {failure}")
    lines.append(f"  unimodular: {record['unimodular']}")
    lines.append(f"  closed 2-forms: dimension {len(closed2)}")
    lines.append(f"  closed 3-forms: dimension {len(closed3)}")
    _emit(record, lines, config)
    return EXIT_OK if jac.ok else EXIT_FAIL


# --------------------------------------------------------------------------
# verify


def _verify_point(g: LieAlgebra, f_text: str, rho_text: str,
                  params: dict) -> dict:
    f = parse_form(f_text, 6, 2)
    rho = parse_form(rho_text, 6, 3)
    report = shf_check(g, f, rho)
    return report.as_dict()


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    reports = []
    if args.equations:
        if not (args.F and args.rho):
            raise ConfigError(
                "--equations needs an explicit witness: --F and --rho")
        g = _custom_algebra(args.equations)
        f = parse_form(args.F, 6, 2)
        rho = parse_form(args.rho, 6, 3)
        reports.append((shf_check(g, f, rho), {}))
    else:
        entries = _load_entries(config)
        entry = resolve_entry(entries, args.name)
        if entry.witness is None and entry.su2 is None:
            record = {
                "schema": SCHEMA_VERSION,
                "command": "verify",
                "config": config.as_dict(),
                "entry": entry.name,
                "ok": False,
                "detail": "no witness; run obstruct",
            }
            _emit(record, [f"{entry.name}: no witness; run obstruct"],
                  config)
            return EXIT_FAIL
        for point in _entry_points(entry, config):
            bound = instantiate(entry, point)
            if args.F and args.rho:
                f = parse_form(args.F, 6, 2)
                rho = parse_form(args.rho, 6, 3)
            else:
                f, rho = bound.f, bound.rho
            reports.append((shf_check(bound.algebra, f, rho),
                            bound.assignment))

    ok = all(r.overall for r, _ in reports)
    record = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "config": config.as_dict(),
        "reports": [dict(r.as_dict(),
                         assignment={k: str(v) for k, v in a.items()})
                    for r, a in reports],
        "ok": ok,
    }
    lines = []
    for r, _ in reports:
        lines.append(str(r))
    lines.append(f"verified {len(reports)} witness(es): "
                 f"{'all pass' if ok else 'FAILURES PRESENT'}")
    _emit(record, lines, config)
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# obstruct


def _explicit_certificates(g: LieAlgebra, args: argparse.Namespace,
                           config: RunConfig) -> list[Certificate]:
    certs = []
    if args.alpha:
        alpha = parse_form(args.alpha, 6, 1)
        certs.append(certify_isotropic_covector(
            g, alpha, mode=config.mode, trials=config.trials,
            seed=config.seed, sample_size=config.sample_size))
    if args.x:
        x = parse_vector(args.x, 6)
        y = parse_vector(args.y, 6) if args.y else None
        certs.append(certify_sign_pair(
            g, x, y, mode=config.mode, trials=config.trials,
            seed=config.seed, sample_size=config.sample_size))
    if args.cube:
        certs.append(certify_contraction_cube(g, parse_vector(args.cube, 6)))
    if args.search:
        found = search_witness(
            g, field=config.field, mode=config.mode, trials=config.trials,
            seed=config.seed, sample_size=config.sample_size)
        if found is not None:
            certs.append(found)
    return certs


def cmd_obstruct(args: argparse.Namespace, config: RunConfig) -> int:
    explicit = bool(args.alpha or args.x or args.cube or args.search)
    certs: list[tuple[Certificate | None, dict]] = []

    if args.equations:
        if not explicit:
            raise ConfigError(
                "--equations needs a witness (--alpha, --x [--y], --cube) "
                "or --search")
        g = _custom_algebra(args.equations)
        for cert in _explicit_certificates(g, args, config):
            certs.append((cert, {}))
    else:
        entries = _load_entries(config)
        entry = resolve_entry(entries, args.name)
        for point in _entry_points(entry, config):
            bound = instantiate(entry, point)
            if explicit:
                for cert in _explicit_certificates(bound.algebra, args,
                                                   config):
                    certs.append((cert, bound.assignment))
            elif entry.obstruction is not None:
                case = entry.obstruction.select(bound.assignment)
                cert = dispatch_certificate(
                    entry.obstruction, case, bound.algebra,
                    config.classify_config())
                certs.append((cert, bound.assignment))
            else:
                found = search_witness(
                    bound.algebra, field=config.field, mode=config.mode,
                    trials=config.trials, seed=config.seed,
                    sample_size=config.sample_size)
                certs.append((found, bound.assignment))

    ok = bool(certs) and all(c is not None and c.certified
                             for c, _ in certs)
    record = {
        "schema": SCHEMA_VERSION,
        "command": "obstruct",
        "config": config.as_dict(),
        "certificates": [
            dict((c.as_dict() if c is not None
                  else {"verdict": "none", "detail": "search found no "
                        "obstruction witness"}),
                 assignment={k: str(v) for k, v in a.items()})
            for c, a in certs],
        "ok": ok,
    }
    lines = []
    for c, a in certs:
        prefix = (", ".join(f"{k}={v}" for k, v in a.items()) + ": "
                  if a else "")
        if c is None:
            lines.append(prefix + "search found no obstruction witness")
        else:
            lines.append(prefix + str(c))
    lines.append(f"{len(certs)} certificate check(s): "
                 f"{'all certified' if ok else 'NOT CERTIFIED'}")
    _emit(record, lines, config)
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# classify


def cmd_classify(args: argparse.Namespace, config: RunConfig) -> int:
    entries = _load_entries(config)
    cc = config.classify_config()

    if args.all:
        sweep = classify_all(entries, cc)
        record = dict(sweep.as_dict(), schema=SCHEMA_VERSION,
                      command="classify", config=config.as_dict())
        _emit(record, sweep.summary_lines(), config)
        return EXIT_OK if sweep.ok else EXIT_FAIL

    if not args.name:
        raise ConfigError("classify needs an entry name or --all")
    entry = resolve_entry(entries, args.name)
    reports = [classify(entry, point, cc)
               for point in _entry_points(entry, config)]
    ok = all(r.ok for r in reports)
    record = {
        "schema": SCHEMA_VERSION,
        "command": "classify",
        "config": config.as_dict(),
        "reports": [r.as_dict() for r in reports],
        "ok": ok,
    }
    lines = [str(r) for r in reports]
    verdicts = {r.observed for r in reports}
    if ok and verdicts == {"yes"}:
        lines.append(f"{entry.name}: admits a symplectic half-flat pair "
                     "(witness verified)")
    elif ok and verdicts == {"no"}:
        lines.append(f"{entry.name}: no symplectic half-flat pair "
                     "(obstruction certified)")
    _emit(record, lines, config)
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# susy


def cmd_susy(args: argparse.Namespace, config: RunConfig) -> int:
    k_par = _parse_fraction_flag(args.kpar, "--kpar")
    k_perp = _parse_fraction_flag(args.kperp, "--kperp")
    if k_par * k_par + k_perp * k_perp != 1:
        raise ConfigError(
            f"(k_par, k_perp) = ({k_par}, {k_perp}) is not on the unit "
            "circle: k_par^2 + k_perp^2 must equal 1")
    if k_par == 0 or k_perp == 0:
        raise ConfigError(
            "the construction is defined only for an intermediate angle: "
            "k_par and k_perp must both be nonzero, since the coupling "
            "constant k_par*k_perp enters the second equation")
    angle = RotationAngle(k_par=k_par, k_perp=k_perp)

    entries = _load_entries(config)
    entry = resolve_entry(entries, args.name)
    if entry.su2 is None:
        _diag(f"{entry.name}: the catalog stores no SU(2) construction "
              "data for this entry")
        return EXIT_FAIL

    stages = []
    ok = True
    for point in _entry_points(entry, config):
        bound = instantiate(entry, point)
        su2_report = su2_axioms_check(bound.su2)
        embedding = embed_su3(bound.su2)
        shf_report = shf_check(bound.algebra, embedding.f, embedding.rho)
        stage = {
            "assignment": {k: str(v) for k, v in bound.assignment.items()},
            "su2_axioms": su2_report.as_dict(),
            "shf": shf_report.as_dict(),
            "susy": None,
        }
        texts = [str(su2_report), str(shf_report)]
        point_ok = su2_report.ok and shf_report.overall
        if point_ok:
            data = from_shf(bound.su2, angle, shf_report)
            susy_report = susy_check(data, bound.algebra)
            stage["susy"] = susy_report.as_dict()
            texts.append(str(susy_report))
            point_ok = susy_report.ok
        else:
            texts.append("SUSY equations skipped: the half-flat "
                         "preconditions failed")
        stages.append((stage, texts))
        ok = ok and point_ok

    record = {
        "schema": SCHEMA_VERSION,
        "command": "susy",
        "config": config.as_dict(),
        "entry": entry.name,
        "angle": {"k_par": str(k_par), "k_perp": str(k_perp)},
        "stages": [s for s, _ in stages],
        "ok": ok,
    }
    lines = [f"type-IIA construction on {entry.name} at "
             f"(k_par, k_perp) = ({k_par}, {k_perp})"]
    for _, texts in stages:
        lines.extend(texts)
    lines.append(f"pipeline: {'pass' if ok else 'FAIL'}")
    _emit(record, lines, config)
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# report


def cmd_report(args: argparse.Namespace, config: RunConfig) -> int:
    entries = _load_entries(config)
    annotations = catalog_annotations(_catalog_path(config))
    groups: dict[str, dict] = {}
    for e in entries:
        g = groups.setdefault(e.source, {"entries": 0, "yes": 0, "no": 0,
                                         "sample_points": 0})
        g["entries"] += 1
        g[e.verdict] += 1
        g["sample_points"] += len(e.sample_points())
    record = {
        "schema": SCHEMA_VERSION,
        "command": "report",
        "config": config.as_dict(),
        "entries": len(entries),
        "sample_points": sum(len(e.sample_points()) for e in entries),
        "groups": groups,
        "annotations": annotations,
        "ok": True,
    }
    lines = [f"catalog: {len(entries)} entries, "
             f"{record['sample_points']} stored parameter points"]
    for source in sorted(groups):
        g = groups[source]
        lines.append(f"  {source}: {g['entries']} entries "
                     f"({g['yes']} yes / {g['no']} no), "
                     f"{g['sample_points']} points")
    for source in sorted(annotations):
        lines.append(f"  note [{source}]: {annotations[source]}")
    _emit(record, lines, config)
    return EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stableforms",
        description="Exact verification engine for symplectic half-flat "
                    "structures on 6-dimensional solvable Lie algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="independent randomized trials per identity "
                             f"(default {DEFAULT_TRIALS})")
    common.add_argument("--seed", type=lambda s: int(s, 0),
                        default=DEFAULT_SEED,
                        help="64-bit master seed (default 0xC0FFEE)")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_SIZE,
                        dest="samples",
                        help="size of the integer sample set per variable "
                             f"(default {DEFAULT_SAMPLE_SIZE})")
    common.add_argument("--field", choices=["sqrt3"], default=None,
                        help="enable the quadratic scalar extension")
    common.add_argument("--exact", action="store_true",
                        help="fully symbolic certificates instead of "
                             "randomized identity testing")
    common.add_argument("--format", choices=["text", "json"],
                        default="text", dest="fmt",
                        help="output format (default text)")
    common.add_argument("--param", action="append", default=[],
                        metavar="NAME=VALUE",
                        help="parameter assignment for family entries "
                             "(repeatable)")
    common.add_argument("--catalog", default=None, metavar="PATH",
                        help="catalog file (overrides STABLEFORMS_CATALOG)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common],
                       help="parse structure equations and report basic "
                            "invariants")
    p.add_argument("name", nargs="?", help="catalog entry name")
    p.add_argument("--equations", help="explicit structure equations, "
                   'e.g. "(0,0,0,0,0,e12)"')
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("verify", parents=[common],
                       help="re-verify a symplectic half-flat witness")
    p.add_argument("name", nargs="?", help="catalog entry name")
    p.add_argument("--equations", help="explicit structure equations")
    p.add_argument("--F", help="closed 2-form of the witness pair")
    p.add_argument("--rho", help="closed 3-form of the witness pair")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("obstruct", parents=[common],
                       help="re-establish a non-existence certificate")
    p.add_argument("name", nargs="?", help="catalog entry name")
    p.add_argument("--equations", help="explicit structure equations")
    p.add_argument("--alpha", help="closed covector for the isotropy "
                   "certificate")
    p.add_argument("--x", help="frame vector (sign-pair certificate)")
    p.add_argument("--y", help="second frame vector (sign-pair "
                   "certificate)")
    p.add_argument("--cube", help="vector for the contraction-cube "
                   "certificate")
    p.add_argument("--search", action="store_true",
                   help="scan for an obstruction witness automatically")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("classify", parents=[common],
                       help="replay stored verdicts against fresh "
                            "computation")
    p.add_argument("name", nargs="?", help="catalog entry name")
    p.add_argument("--all", action="store_true",
                   help="sweep every entry at every stored parameter "
                        "point")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("susy", parents=[common],
                       help="run the SU(2)-based type-IIA construction")
    p.add_argument("name", help="catalog entry name")
    p.add_argument("--kpar", required=True,
                   help="cos(angle), an exact rational such as 3/5")
    p.add_argument("--kperp", required=True,
                   help="sin(angle), an exact rational such as 4/5")
    p.set_defaults(func=cmd_susy)

    p = sub.add_parser("report", parents=[common],
                       help="catalog inventory (no computation)")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            trials=args.trials,
            seed=args.seed,
            sample_size=args.samples,
            field=args.field,
            exact=args.exact,
            fmt=args.fmt,
            params=_parse_params(args.param),
            catalog_path=args.catalog,
        )
        return args.func(args, config)
    except ConfigError as e:
        _diag(f"configuration error: {e}")
        return EXIT_CONFIG
    except UnknownEntryError as e:
        _diag(f"unknown entry: {e.args[0] if e.args else e}")
        return EXIT_UNKNOWN
    except ParseError as e:
        _diag(f"parse error: {e}")
        return EXIT_PARSE
    except RangeError as e:
        _diag(f"configuration error: {e}")
        return EXIT_CONFIG
    except CatalogError as e:
        _diag(f"catalog error: {e}")
        return EXIT_CONFIG
    except ValueError as e:
        _diag(f"configuration error: {e}")
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())

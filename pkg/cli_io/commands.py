"""Command-line surface: verify, double, twisted-double, monodromy and export.

Each command builds one Report, writes it as JSON lines to stdout, and maps
the outcome to an exit code: 0 when every check passes, 1 on any failed
check, 2 for unreadable or invalid input.

Key functions: build_parser, run, algebra_suite
"""
from bootstrap.primary_imports import argparse, json, sys
from config import runtime_settings as settings
from double_construction import build_double, left_right_iso, verify_double
from dual_coalgebra import arrow_checks, dual_of
from group_twisted_double import dpr_double, fun_qha, sigma_check, verify_cocycle
from group_twisted_double.dpr import product_coefficient
from monodromy import monodromy_suite, second_level_monodromy
from quasi_hopf import (
    QuasiTriangularQHA,
    antipode_image_check,
    derived_twists,
    pq_elements,
    r_inverse_formula,
    verify_quasi_hopf,
    verify_quasitriangular,
)
from utils.errors import QHAError, SpecFileError
from utils.report import Report
from utils.text import format_scalar

from .exporters import FORMATS, export_algebra, export_structure, write_records
from .readers import StructureFile, load, load_cocycle, load_group

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _log(message):
    if settings.VERBOSE:
        print(message, file=sys.stderr)


def algebra_suite(H, report=None):
    """Axioms, derived elements, the dual, and the R-matrix suite when H is quasitriangular."""
    if report is None:
        report = Report(f"verify:{H.name}")
    report.merge(verify_quasi_hopf(H))
    if not report.passed:
        return report
    _, r = derived_twists(H)
    report.merge(r)
    _, r = pq_elements(H)
    report.merge(r)
    dual, r = dual_of(H)
    report.merge(r)
    report.merge(arrow_checks(H, dual))
    if isinstance(H, QuasiTriangularQHA):
        report.merge(verify_quasitriangular(H))
        _, _, r = r_inverse_formula(H)
        report.merge(r)
        report.merge(antipode_image_check(H))
    return report


def _load_qha(name):
    H = load(name)
    if isinstance(H, StructureFile):
        raise SpecFileError(name, "a structure-only file has no quasi-Hopf data")
    return H


def cmd_verify(args):
    H = _load_qha(args.algebra)
    _log(f"Verifying {H.name} (dim {H.dim})...")
    return algebra_suite(H)


def cmd_double(args):
    H = _load_qha(args.algebra)
    report = Report(f"double:{H.name}")
    report.merge(verify_quasi_hopf(H), prefix="input")
    if not report.passed:
        print(f"ERROR: {H.name} is not a quasi-Hopf algebra; the double is not built.", file=sys.stderr)
        return report
    _log(f"Building D({H.name})...")
    Dalg, r = build_double(H)
    report.merge(r)
    _log("Verifying the double...")
    report.merge(verify_double(Dalg))
    _, r = left_right_iso(Dalg)
    report.merge(r)
    if args.export:
        path = export_algebra(Dalg.base, None if args.export == "-" else args.export)
        print(f"Double written to {path}", file=sys.stderr)
    return report


def _square_coefficients(td):
    """(x⊗1)² = Σ_t θ(x, x, t)(x²⊗δ_t) rendered per group element."""
    G, w = td.group, td.cocycle
    lines = []
    for x in G.elements():
        x2 = G.labels[G.mul(x, x)]
        terms = [f"d_{G.labels[t]}: {format_scalar(product_coefficient(G, w, x, x, t))}" for t in G.elements()]
        lines.append(f"({G.labels[x]}⊗1)² = {x2}⊗[" + ", ".join(terms) + "]")
    return "; ".join(lines)


def cmd_twisted_double(args):
    G = load_group(args.group)
    w = load_cocycle(args.cocycle)
    report = Report(f"twisted-double:{G.name}:{w.name}")
    report.merge(verify_cocycle(G, w))
    if not report.passed:
        print(f"ERROR: {w.name} is not a normalized 3-cocycle on {G.name}.", file=sys.stderr)
        return report
    H = fun_qha(G, w, check=False)
    report.merge(verify_quasi_hopf(H), prefix="input")
    if not report.passed:
        print(f"ERROR: {w.name} does not define a quasi-Hopf algebra; D^ω({G.name}) is not built.",
              file=sys.stderr)
        return report
    td, r = sigma_check(G, w)
    report.merge(r)
    report.add_flag("twisted-double/square-coefficients", "(x⊗1)(x⊗1) expansion", True,
                    detail=_square_coefficients(td))
    return report


def cmd_monodromy(args):
    H = _load_qha(args.algebra)
    report = monodromy_suite(H)
    if isinstance(H, QuasiTriangularQHA):
        Dalg, _ = build_double(H)
        second_level_monodromy(Dalg, report)
    return report


def _export_target(name):
    """'double:<algebra>', 'twisted:<group>:<cocycle>' or a plain algebra name."""
    if name.startswith("double:"):
        Dalg, _ = build_double(_load_qha(name[len("double:"):]))
        return lambda path, fmt: export_algebra(Dalg.base, path, fmt)
    if name.startswith("twisted:"):
        _, group, cocycle = name.split(":", 2)
        td = dpr_double(load_group(group), load_cocycle(cocycle))
        return lambda path, fmt: export_structure(td.algebra.name, td.algebra, td.coproduct, td.counit, path, fmt)
    H = load(name)
    if isinstance(H, StructureFile):
        return lambda path, fmt: export_structure(H.name, H.algebra, H.coproduct, H.counit, path, fmt)
    return lambda path, fmt: export_algebra(H, path, fmt)


def cmd_export(args):
    report = Report(f"export:{args.object}")
    path = _export_target(args.object)(args.output, args.format)
    report.add_flag("export/written", "spec file written", True, detail=path)
    return report


def build_parser():
    parser = argparse.ArgumentParser(
        prog="QHA-Doubles",
        description="Verify quasi-Hopf algebras, their quantum doubles, twisted doubles and monodromy algebras.",
    )
    parser.add_argument("--tol", type=float, default=None, help="verdict tolerance (default from settings_user.toml)")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized spot checks")
    parser.add_argument("--force-deep-checks", action="store_true", help="lift the dimension gates")
    parser.add_argument("--failures-only", action="store_true", help="emit only failing checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="full quasi-Hopf (and R-matrix) suite for an algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("double", help="build and verify the quantum double D(G)")
    p.add_argument("algebra")
    p.add_argument("--export", nargs="?", const="-", default=None, help="write D(G) as sc-json (optional path)")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("twisted-double", help="D^ω(G) and its identification with the generic double")
    p.add_argument("group")
    p.add_argument("cocycle")
    p.set_defaults(func=cmd_twisted_double)

    p = sub.add_parser("monodromy", help="monodromy matrix relations inside D(G)")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("export", help="write structure constants of a built algebra")
    p.add_argument("object", help="algebra name, double:<algebra> or twisted:<group>:<cocycle>")
    p.add_argument("--format", choices=FORMATS, default="sc-json")
    p.add_argument("--output", default=None, help="target file (default: output_dir/<name>.json)")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv=None, stream=None):
    """Parse argv, run the command and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings.override(tol=args.tol, seed=args.seed, force_deep_checks=args.force_deep_checks)
    except ValueError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = args.func(args)
    except (SpecFileError, OSError, json.JSONDecodeError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT
    except QHAError as e:
        print(f"ERROR: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL
    write_records(report, stream, emit_passing=not args.failures_only and settings.EMIT_PASSING)
    failures = report.failures()
    if failures:
        print(f"{len(failures)} of {len(report)} checks failed; first: {failures[0].name} ({failures[0].anchor})",
              file=sys.stderr)
        return EXIT_FAIL
    _log(f"All {len(report)} checks passed.")
    return EXIT_PASS

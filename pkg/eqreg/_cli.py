import argparse
import logging
import sys
from sys import version_info

import numpy

from .__about__ import __license__, __version__
from ._exceptions import ConfigurationError, EqregError, SpecSyntaxError
from .bifunction import classify_families, regularize, resolve_spec, sample_matrix
from .domain import TruncationSchedule, make_grid, truncation_grid
from .envelope import EnvelopeKind
from .harness import SuiteReport, emit_report, fixture_names, run_example, run_suite
from .harness.suites import suite_names
from .helpers import REFINEMENT, TOL, TOL_STRICT, Tolerances
from .properties import (
    check_monotonicity,
    check_properly_quasimonotone,
    check_segment_condition,
    check_semistrict_diagonal,
    check_upper_sign,
)
from .solvers import check_coercivity, existence_pipeline, solve_cfp, solve_ep

logger = logging.getLogger(__name__)

DEFAULT_COUNT = 201
DEFAULT_SCHEDULE = "0.125:1:8"
PROPERTIES = (
    "monotone",
    "pseudomonotone",
    "quasimonotone",
    "properly_quasimonotone",
    "upper_sign",
    "alpha",
    "beta",
    "semistrict_diagonal",
)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        return args.func(args)
    except SpecSyntaxError as e:
        print(f"error: {e}\n{e.pretty()}", file=sys.stderr)
        return 2
    except EqregError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _configure_logging(args):
    if args.quiet:
        level = logging.WARNING
    elif args.verbose:
        level = logging.DEBUG
    else:
        level = logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _build_parser():
    parser = argparse.ArgumentParser(
        description="Regularize bifunctions on 1-D grids and solve EP/CFP.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version=_get_version_text(),
        help="display version information",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=TOL, help="non-strict tolerance")
    common.add_argument(
        "--tol-strict", type=float, default=TOL_STRICT, help="strict tolerance"
    )
    common.add_argument(
        "--refinement",
        type=int,
        default=REFINEMENT,
        help="one-sided limits are probed at h / refinement",
    )
    common.add_argument(
        "--format", choices=("json", "csv"), default="json", help="output format"
    )
    common.add_argument("--out", default=None, help="write to PATH instead of stdout")
    common.add_argument(
        "-q", "--quiet", action="store_true", default=False, help="only log warnings"
    )
    common.add_argument(
        "--verbose", action="store_true", default=False, help="log debug output"
    )

    spec_args = argparse.ArgumentParser(add_help=False)
    spec_args.add_argument("spec", help="spec file or builtin name")
    spec_args.add_argument("--grid", default=None, help="lower:upper:count")
    spec_args.add_argument(
        "--schedule",
        default=None,
        help=f"h:n_min:n_max for unbounded K (default {DEFAULT_SCHEDULE})",
    )

    kind_help = "regularization kind: s, c, q, cbar or qbar"
    sub = parser.add_subparsers(dest="command", required=True)

    with_spec = [common, spec_args]
    p = sub.add_parser("regularize", parents=with_spec, help="regularize a table")
    p.add_argument("--kind", required=True, help=kind_help)
    p.add_argument("--row", type=float, default=None, help="emit only the row at x")
    p.set_defaults(func=_regularize)

    p = sub.add_parser("solve-ep", parents=with_spec, help="solve EP")
    p.add_argument("--kind", default=None, help=kind_help)
    p.set_defaults(func=_solve_ep)

    p = sub.add_parser("solve-cfp", parents=with_spec, help="solve CFP")
    p.add_argument("--kind", default=None, help=kind_help)
    p.add_argument("--radius", type=float, default=None, help="local CFP radius")
    p.set_defaults(func=_solve_cfp)

    p = sub.add_parser("check", parents=with_spec, help="check properties")
    p.add_argument("--kind", default=None, help=kind_help)
    p.add_argument(
        "--property",
        action="append",
        choices=PROPERTIES,
        default=None,
        help="property to check, repeatable (default: all)",
    )
    p.add_argument("--radius", type=float, default=None, help="local upper sign radius")
    p.add_argument(
        "--method",
        choices=("pair", "subset"),
        default="pair",
        help="proper quasimonotonicity scan",
    )
    p.set_defaults(func=_check)

    p = sub.add_parser("classify", parents=with_spec, help="family membership")
    p.add_argument("--bound", type=float, default=1.0e3, help="divergence bound M")
    p.add_argument(
        "--probe",
        type=float,
        action="append",
        default=None,
        help="probe point x, repeatable",
    )
    p.set_defaults(func=_classify)

    p = sub.add_parser("coercivity", parents=with_spec, help="check C1, C2 or C3")
    p.add_argument("--condition", choices=("C1", "C2", "C3"), default="C1")
    p.add_argument("--kind", default=None, help=kind_help)
    p.set_defaults(func=_coercivity)

    p = sub.add_parser("exist", parents=with_spec, help="existence pipeline")
    p.add_argument("--variant", choices=("C2", "C3"), default="C2")
    p.set_defaults(func=_exist)

    p = sub.add_parser("example", parents=[common], help="run builtin examples")
    p.add_argument(
        "names",
        nargs="*",
        help="examples to run (default: all)\n" + "\n".join(fixture_names()),
    )
    p.set_defaults(func=_example)

    p = sub.add_parser("suite", parents=[common], help="run randomized suites")
    p.add_argument(
        "names",
        nargs="*",
        help="suites to run (default: all)\n" + "\n".join(suite_names()),
    )
    p.add_argument("--instances", type=int, default=None, help="instances per suite")
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument(
        "--timing", action="store_true", default=False, help="report wall times"
    )
    p.set_defaults(func=_suite)

    return parser


def _get_version_text():
    return "\n".join(
        [
            f"eqreg {__version__} "
            f"[numpy {numpy.__version__}, "
            f"Python {version_info.major}.{version_info.minor}.{version_info.micro}]",
            f"License {__license__}",
        ]
    )


def _tolerances(args):
    return Tolerances(args.tol, args.tol_strict, args.refinement)


def _parse_fields(text, what, types):
    parts = text.split(":")
    if len(parts) != len(types):
        layout = ":".join(name for name, _ in types)
        raise ConfigurationError(f"{what} must look like {layout}")
    try:
        return [cast(p) for p, (_, cast) in zip(parts, types)]
    except ValueError:
        raise ConfigurationError(f"cannot parse {what} {text!r}") from None


def _schedule(args, spec):
    h, n_min, n_max = _parse_fields(
        args.schedule or DEFAULT_SCHEDULE,
        "--schedule",
        (("h", float), ("n_min", int), ("n_max", int)),
    )
    lower, upper = spec.domain
    return TruncationSchedule(lower, upper, h, n_min, n_max)


def _grid(args, spec):
    """The --grid, else a default grid of K, else the finest truncation."""
    if args.grid is not None:
        lower, upper, count = _parse_fields(
            args.grid, "--grid", (("lower", float), ("upper", float), ("count", int))
        )
        return make_grid(lower, upper, count)
    if spec.is_bounded:
        lower, upper = spec.domain
        return make_grid(lower, upper, DEFAULT_COUNT)
    schedule = _schedule(args, spec)
    return truncation_grid(schedule, schedule.n_max)


def _table(args, spec, kind=None):
    t = _tolerances(args)
    table = sample_matrix(spec, _grid(args, spec))
    if kind is not None:
        table = regularize(table, kind, spec, t.refinement, t.tol)
    return table


def _inputs(args, **extra):
    out = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "quiet", "verbose", "out", "format")
    }
    out.update(extra)
    return out


def _emit(args, report):
    text = emit_report(report, args.format, args.out, getattr(args, "timing", False))
    if args.out is None:
        sys.stdout.write(text)


def _regularize(args):
    spec = resolve_spec(args.spec)
    kind = EnvelopeKind.parse(args.kind)
    table = _table(args, spec, kind)
    report = SuiteReport("regularize", _inputs(args))
    if args.row is None:
        report.tables[table.label] = table
    else:
        i = table.grid.index_of(args.row)
        report.tables[f"{table.label}(x={args.row})"] = table.row(i)
    _emit(args, report)
    return 0


def _solve_ep(args):
    spec = resolve_spec(args.spec)
    table = _table(args, spec, args.kind and EnvelopeKind.parse(args.kind))
    report = SuiteReport("solve-ep", _inputs(args))
    report.solution_sets[f"EP({table.label})"] = solve_ep(table, args.tol)
    _emit(args, report)
    return 0


def _solve_cfp(args):
    spec = resolve_spec(args.spec)
    table = _table(args, spec, args.kind and EnvelopeKind.parse(args.kind))
    report = SuiteReport("solve-cfp", _inputs(args))
    cfp = solve_cfp(table, args.tol, args.radius)
    report.solution_sets[f"{cfp.problem}({table.label})"] = cfp
    _emit(args, report)
    return 0


def _check(args):
    spec = resolve_spec(args.spec)
    t = _tolerances(args)
    table = _table(args, spec, args.kind and EnvelopeKind.parse(args.kind))
    report = SuiteReport("check", _inputs(args))
    for name in args.property or PROPERTIES:
        if name in ("monotone", "pseudomonotone", "quasimonotone"):
            verdict = check_monotonicity(table, name, t.tol, t.tol_strict)
        elif name == "properly_quasimonotone":
            verdict = check_properly_quasimonotone(table, args.method, t.tol)
        elif name == "upper_sign":
            verdict = check_upper_sign(table, args.radius, t.tol)
        elif name in ("alpha", "beta"):
            verdict = check_segment_condition(table, name, t.tol, t.tol_strict)
        else:
            criterion = check_semistrict_diagonal(
                table, spec, t.tol, t.tol_strict, t.refinement
            )
            report.verdicts[name] = {
                "applies": criterion.applies,
                "holds": criterion.holds,
                "upper_sign": criterion.upper_sign.as_dict(),
                "diagonal_min": criterion.diagonal_min,
            }
            continue
        report.verdicts[name] = verdict
        logger.info("%s: %s", name, "pass" if verdict.passed else "fail")
    _emit(args, report)
    return 0


def _classify(args):
    spec = resolve_spec(args.spec)
    t = _tolerances(args)
    families = classify_families(
        spec,
        _schedule(args, spec),
        probes=args.probe,
        bound=args.bound,
        tol=t.tol,
        tol_strict=t.tol_strict,
        refinement=t.refinement,
    )
    report = SuiteReport("classify", _inputs(args))
    report.verdicts["families"] = families
    _emit(args, report)
    return 0


def _coercivity(args):
    spec = resolve_spec(args.spec)
    t = _tolerances(args)
    kind = args.kind and EnvelopeKind.parse(args.kind)
    result = check_coercivity(
        spec, _schedule(args, spec), args.condition, kind, t.tol, t.refinement
    )
    report = SuiteReport("coercivity", _inputs(args))
    report.verdicts[args.condition] = result
    _emit(args, report)
    return 0


def _exist(args):
    spec = resolve_spec(args.spec)
    t = _tolerances(args)
    result = existence_pipeline(
        spec, _schedule(args, spec), args.variant, t.tol, t.tol_strict, t.refinement
    )
    report = SuiteReport("exist", _inputs(args))
    report.verdicts[args.variant] = result
    _emit(args, report)
    return 0


def _example(args):
    t = _tolerances(args)
    names = args.names or fixture_names()
    report = SuiteReport("example", _inputs(args))
    for name in names:
        sub = run_example(name, t)
        for check in sub.checks:
            check.name = f"{name}: {check.name}"
            report.add(check)
        report.solution_sets.update(
            {f"{name}: {k}": v for k, v in sub.solution_sets.items()}
        )
        report.verdicts.update({f"{name}: {k}": v for k, v in sub.verdicts.items()})
        report.tables.update({f"{name}: {k}": v for k, v in sub.tables.items()})
    _emit(args, report)
    return 0 if report.passed else 1


def _suite(args):
    report = run_suite(
        args.names, args.instances, args.seed, _tolerances(args), args.timing
    )
    report.inputs = _inputs(args)
    _emit(args, report)
    return 0 if report.passed else 1

"""Command-line front end.

    braid-entropy estimate --braid "1 -2" --strands 3
    braid-entropy orbit --braid "1 -2" --strands 3 --iters 10 --format csv
    braid-entropy search --max-length 4 --strands 3..5
    braid-entropy converge --braid "1 -2" --strands 3 --iters 1000
    braid-entropy symmetry --braid "1 -2" --strands 3

Exit codes: 0 success, 1 usage or parse error, 2 estimator did not
converge, 3 resource limit hit.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys

from . import analysis, entropy, export, search
from .errors import BraidEntropyError, FloatOverflow, ResourceLimit
from .words import parse_braid

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2
EXIT_RESOURCE = 3

WORKERS_ENV = "BRAID_ENTROPY_WORKERS"

log = logging.getLogger("braid_entropy")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for non-convergence here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _log_base(text: str) -> float:
    if text == "e":
        return math.e
    v = float(text)
    if not v > 0 or v == 1:
        raise argparse.ArgumentTypeError(f"invalid log base {text}")
    return v


def _strand_range(text: str) -> tuple[int, int] | None:
    if text == "all":
        return None
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N..M or 'all', got {text}") from None
    if not 3 <= a <= b:
        raise argparse.ArgumentTypeError(f"need 3 <= min <= max strands, got {text}")
    return a, b


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braid-entropy", description="Topological entropy of braids.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def braid_args(p):
        p.add_argument("--braid", required=True, help='signed generators, e.g. "1 -2"')
        p.add_argument("--strands", type=int, required=True)

    def engine_args(p):
        p.add_argument("--mode", choices=entropy.MODES, default="exact")
        p.add_argument("--digit-cap", type=_positive_int, default=entropy.DEFAULT_DIGIT_CAP)

    def output_args(p, default_format):
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--output", "-o", help="write here instead of standard output")

    p = sub.add_parser("estimate", help="estimate the entropy of one braid")
    braid_args(p)
    engine_args(p)
    p.add_argument("--estimator", choices=entropy.ESTIMATORS, default="cesaro")
    p.add_argument("--eps", type=_positive_float, default=entropy.DEFAULT_EPS)
    p.add_argument("--m-max", type=_positive_int, default=entropy.DEFAULT_M_MAX)
    p.add_argument("--window", type=_positive_int, default=entropy.DEFAULT_WINDOW)
    p.add_argument("--log-base", type=_log_base, default=math.e)
    p.add_argument("--output", "-o")

    p = sub.add_parser("orbit", help="dump the orbit trace")
    braid_args(p)
    engine_args(p)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--coords", action="store_true", help="include coordinate vectors")
    p.add_argument("--log-base", type=_log_base, default=math.e)
    output_args(p, "csv")

    p = sub.add_parser("search", help="survey maximal-entropy short braids")
    p.add_argument("--max-length", type=_positive_int, required=True)
    p.add_argument("--min-length", type=_positive_int, default=1)
    p.add_argument("--strands", type=_strand_range, default=None, help="N, N..M or all")
    p.add_argument("--eps", type=_positive_float, default=search.COARSE_EPS)
    p.add_argument("--refine-eps", type=_positive_float, default=search.REFINE_EPS)
    p.add_argument("--refine-top", type=_positive_int, default=search.REFINE_TOP)
    p.add_argument("--m-max", type=_positive_int, default=search.COARSE_M_MAX)
    p.add_argument("--refine-m-max", type=_positive_int, default=search.REFINE_M_MAX)
    p.add_argument("--mode", choices=entropy.MODES, default="exact")
    p.add_argument("--workers", type=_positive_int, default=_default_workers())
    p.add_argument("--checkpoint-dir")
    p.add_argument("--log-base", type=_log_base, default=math.e)
    output_args(p, "json")

    p = sub.add_parser("converge", help="fit the ln(m)/m error envelope of the Cesaro estimate")
    braid_args(p)
    engine_args(p)
    p.add_argument("--iters", type=int, default=1000)
    p.add_argument("--h-ref", type=float, default=None, help="reference entropy (default: tight ratio estimate)")
    output_args(p, "json")

    p = sub.add_parser("symmetry", help="compare estimates across pruning symmetries")
    braid_args(p)
    p.add_argument("--mode", choices=entropy.MODES, default="exact")
    p.add_argument("--eps", type=_positive_float, default=1e-6)
    p.add_argument("--m-max", type=_positive_int, default=entropy.DEFAULT_M_MAX)
    p.add_argument("--output", "-o")
    return parser


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _base_name(base: float) -> str:
    return "e" if base == math.e else repr(base)


def cmd_estimate(args) -> int:
    word = parse_braid(args.braid, args.strands)
    est = entropy.estimate(
        word, args.estimator, args.eps, args.m_max, args.mode, args.window,
        digit_cap=args.digit_cap,
    )
    config = {
        "command": "estimate", "braid": str(word), "strands": args.strands,
        "estimator": args.estimator, "eps": args.eps, "m_max": args.m_max,
        "window": args.window, "mode": args.mode, "digit_cap": args.digit_cap,
        "log_base": _base_name(args.log_base),
    }
    result = est.to_dict()
    if args.log_base != math.e:
        result["value_in_base"] = est.value / math.log(args.log_base)
    _write(export.dumps({"config": config, "estimate": result}), args.output)
    return EXIT_OK if est.converged else EXIT_NOT_CONVERGED


def cmd_orbit(args) -> int:
    if args.iters < 1:
        raise UsageError(f"--iters must be >= 1, got {args.iters}")
    word = parse_braid(args.braid, args.strands)
    trace = entropy.orbit(
        word, args.iters, args.mode, keep_coords=args.coords, digit_cap=args.digit_cap
    )
    config = {
        "command": "orbit", "braid": str(word), "strands": args.strands,
        "iters": args.iters, "mode": args.mode, "coords": args.coords,
        "digit_cap": args.digit_cap, "log_base": _base_name(args.log_base),
        "format": args.format,
    }
    fmt = export.trace_to_csv if args.format == "csv" else export.trace_to_json
    _write(fmt(trace, config, args.log_base), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.strands is None:
        lo, hi = 3, max(3, search.strand_bound(args.max_length))
    else:
        lo, hi = args.strands
    if args.min_length > args.max_length:
        raise UsageError("--min-length exceeds --max-length")
    table = search.max_entropy_survey(
        args.max_length, lo, hi,
        eps=args.eps, refine_top=args.refine_top, refine_eps=args.refine_eps,
        coarse_m_max=args.m_max, refine_m_max=args.refine_m_max, mode=args.mode,
        workers=args.workers, min_length=args.min_length, checkpoint_dir=args.checkpoint_dir,
    )
    config = dict(table.config)
    config.update(command="search", workers=args.workers, format=args.format,
                  log_base=_base_name(args.log_base))
    fmt = export.survey_to_csv if args.format == "csv" else export.survey_to_json
    _write(fmt(table, config, args.log_base), args.output)
    return EXIT_OK


def cmd_converge(args) -> int:
    if args.iters < 10:
        raise UsageError(f"--iters must be >= {analysis.MIN_TRACE}, got {args.iters}")
    word = parse_braid(args.braid, args.strands)
    extra = {}
    if args.h_ref is None:
        ref = analysis.reference_estimate(word, args.mode)
        h_ref = ref.value
        extra = {"h_ref_converged": ref.converged, "h_ref_iterations": ref.iterations_used}
    else:
        if args.h_ref < 0:
            raise UsageError("--h-ref must be nonnegative")
        h_ref = args.h_ref
    trace = entropy.orbit(word, args.iters, args.mode, digit_cap=args.digit_cap)
    fit = analysis.fit_envelope(trace, h_ref)
    config = {
        "command": "converge", "braid": str(word), "strands": args.strands,
        "iters": args.iters, "mode": args.mode, "h_ref": args.h_ref,
        "digit_cap": args.digit_cap, "format": args.format,
    }
    fmt = export.fit_to_csv if args.format == "csv" else export.fit_to_json
    _write(fmt(fit, config, extra), args.output)
    return EXIT_OK


def cmd_symmetry(args) -> int:
    word = parse_braid(args.braid, args.strands)
    report = entropy.symmetry_check(word, args.eps, m_max=args.m_max, mode=args.mode)
    config = {
        "command": "symmetry", "braid": str(word), "strands": args.strands,
        "eps": args.eps, "m_max": args.m_max, "mode": args.mode, "estimator": "ratio",
    }
    _write(export.dumps({"config": config, "report": report.to_dict()}), args.output)
    return EXIT_OK


COMMANDS = {
    "estimate": cmd_estimate,
    "orbit": cmd_orbit,
    "search": cmd_search,
    "converge": cmd_converge,
    "symmetry": cmd_symmetry,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except (ResourceLimit, FloatOverflow) as exc:
        print(f"braid-entropy: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, BraidEntropyError, ValueError) as exc:
        print(f"braid-entropy: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

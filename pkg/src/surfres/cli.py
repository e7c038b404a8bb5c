"""Command-line front end.

Output is a sequence of ``key: value`` lines starting with ``format: 1``.
With ``--porcelain`` every line is instead a JSON object: first
``{"format": 1}``, then ``{"key": ..., "value": ...}`` per record.

Exit codes: 0 success, 1 bad input, 2 step limit reached, 3 internal
invariant violation or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .acceptance import CRITERIA, run_criterion
from .algebra import as_surface, format_poly, order, parse_poly
from .bounds import RULES, bound_report
from .errors import PreconditionError, SurfresError
from .newton import Staircase, hironaka_polygon, level_polygon, polygon_metrics
from .prepare import preparation_report, tchirnhausen, to_gwt
from .resolve import DEFAULT_MAX_STEPS, STEP_LIMIT, Strategy, resolve_trace
from .svg import staircase_svg
from .transform import Direction, StepKind, Transvection, apply_step

EXIT_OK, EXIT_INPUT, EXIT_STEP_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3


def _q(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _bool(v) -> str:
    return "true" if v else "false"


class Emitter:
    """Collects records; nothing reaches stdout unless the command succeeds
    (or stops at the step limit)."""

    def __init__(self, porcelain=False):
        self.porcelain = porcelain
        self.lines = [json.dumps({"format": 1}) if porcelain else "format: 1"]

    def __call__(self, key, value):
        if self.porcelain:
            self.lines.append(json.dumps({"key": key, "value": value}))
        else:
            if isinstance(value, list):
                value = " ".join(str(v) for v in value) or "-"
            self.lines.append(f"{key}: {value}")

    def flush(self, out):
        out.write("\n".join(self.lines) + "\n")


def _surface(text):
    return as_surface(parse_poly(text))


def _emit_polygon(emit, prefix, st: Staircase):
    m = polygon_metrics(st)
    emit(f"{prefix}.vertices", [str(v) for v in st.vertices])
    emit(
        f"{prefix}.facets",
        [f"{f.p_upper}-{f.q_lower}:slope={_q(f.slope)}:len2={_q(f.squared_length)}" for f in m.facets],
    )
    if m.L is not None:
        emit(f"{prefix}.L", str(m.L))
        emit(f"{prefix}.R", str(m.R))
    emit(f"{prefix}.quadrant", _bool(m.is_quadrant))
    emit(f"{prefix}.dLR_squared", _q(m.dLR_squared))


def cmd_polygon(args, emit):
    S = _surface(args.expr)
    emit("equation", format_poly(S.poly))
    emit("n", S.n)
    delta = hironaka_polygon(S)
    _emit_polygon(emit, "delta", delta)
    if args.levels:
        for k in range(S.n):
            if not S.levels[k].is_zero():
                _emit_polygon(emit, f"level.{k}", level_polygon(S, k))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(staircase_svg(delta, format_poly(S.poly)))
        emit("svg", args.svg)
    return EXIT_OK


def cmd_prepare(args, emit):
    S = _surface(args.expr)
    emit("equation", format_poly(S.poly))
    emit("n", S.n)
    emit("wt", _bool(S.is_wt))
    wt = tchirnhausen(S)
    emit("tchirnhausen", format_poly(wt.poly))
    gwt, alpha = to_gwt(wt)
    emit("gwt.alpha", _q(alpha))
    emit("gwt", format_poly(gwt.poly))
    try:
        rep = preparation_report(wt, args.degree_bound)
    except PreconditionError as exc:
        emit("report", f"unavailable {exc.code}")
        return EXIT_OK
    emit("prepared", _bool(rep.is_prepared))
    for k, w in enumerate(rep.witnesses):
        if k in rep.unresolved:
            emit(f"level.{k}.witness", "not within bound")
        elif w is not None:
            emit(
                f"level.{k}.witness",
                f"r={w.r} s={w.s} phi={w.phi} verified_to={w.verified_to} exact={_bool(w.exact)}",
            )
    for (i, j), v in sorted(rep.mu.items()):
        emit(f"mu.{i}.{j}", v)
    if rep.r_bound is not None:
        emit("r_bound", rep.r_bound)
        emit("psi", str(rep.psi))
    return EXIT_OK


def _parse_step(args) -> StepKind:
    if args.quadratic is not None:
        return StepKind.quadratic(Direction.parse(args.quadratic))
    if args.monoidal_zx is not None:
        return StepKind.monoidal("ZX", Fraction(args.monoidal_zx))
    if args.monoidal_zy is not None:
        return StepKind.monoidal("ZY", Fraction(args.monoidal_zy))
    return StepKind.transvect(Transvection.parse(args.transvection))


def cmd_transform(args, emit):
    S = _surface(args.expr)
    kind = _parse_step(args)
    p = apply_step(S, kind)
    emit("equation", format_poly(S.poly))
    emit("step", str(kind))
    emit("result", format_poly(p))
    o = order(p)
    emit("order", "inf" if o == float("inf") else o)
    emit("dropped", _bool(o < S.n))
    return EXIT_OK


def cmd_resolve(args, emit):
    S = _surface(args.expr)
    strat = Strategy.parse(args.strategy)
    if args.max_steps < 1:
        raise ValueError("--max-steps must be positive")
    trace = resolve_trace(S, strat, args.max_steps)
    emit("equation", format_poly(S.poly))
    emit("n", S.n)
    for w in trace.warnings:
        emit("warning", w)
    for t, st in enumerate(trace.steps, 1):
        emit(f"step.{t}.kind", str(st.kind))
        emit(f"step.{t}.equation", format_poly(st.after_poly))
        emit(f"step.{t}.order", st.after_order)
        if st.delta_snapshot is not None:
            emit(f"step.{t}.polygon", [str(v) for v in st.delta_snapshot.vertices])
    emit("depth", trace.depth)
    emit("outcome", trace.outcome)
    return EXIT_STEP_LIMIT if trace.outcome == STEP_LIMIT else EXIT_OK


def cmd_bounds(args, emit):
    S = _surface(args.expr)
    rep = bound_report(S)
    emit("equation", format_poly(S.poly))
    emit("applicable", [r for r in RULES if r in rep.applicable])
    for rule in RULES:
        if rule in rep.values:
            emit(rule, rep.values[rule])
        else:
            emit(f"unavailable.{rule}", rep.reasons[rule])
    if rep.theta_tan is not None:
        emit("theta_tan", _q(rep.theta_tan))
    return EXIT_OK


def cmd_verify(args, emit):
    passed = 0
    for c in CRITERIA:
        ok, detail = run_criterion(c)
        passed += ok
        emit(f"criterion.{c.number}", f"{'PASS' if ok else 'FAIL'} {c.title}: {detail}")
    emit("passed", f"{passed}/{len(CRITERIA)}")
    return EXIT_OK if passed == len(CRITERIA) else EXIT_INTERNAL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument(
        "--porcelain", action="store_true", default=argparse.SUPPRESS, help="JSON-lines output"
    )
    parser = _Parser(
        prog="surfres", description="Combinatorial resolution of surface singularities."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--porcelain", action="store_true", help="JSON-lines output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polygon", parents=[common], help="projected and level polygons")
    p.add_argument("expr")
    p.add_argument("--levels", action="store_true", help="also print every level polygon")
    p.add_argument("--svg", metavar="PATH", help="write the projected polygon as SVG")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("prepare", parents=[common], help="Tchirnhausen, GWT and quadrant witnesses")
    p.add_argument("expr")
    p.add_argument("--degree-bound", type=int, metavar="D", help="X-degree bound for witnesses")
    p.set_defaults(func=cmd_prepare)

    p = sub.add_parser("transform", parents=[common], help="apply one transformation")
    p.add_argument("expr")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--quadratic", metavar="a:b:c")
    g.add_argument("--monoidal-zx", metavar="G")
    g.add_argument("--monoidal-zy", metavar="G")
    g.add_argument("--transvection", metavar="a1,a2,...")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("resolve", parents=[common], help="run the resolution steps")
    p.add_argument("expr")
    p.add_argument("--strategy", default="generic", help="generic, worst or dirs=a:b:c,...")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS, metavar="N")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("bounds", parents=[common], help="closed-form blow-up bounds")
    p.add_argument("expr")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance corpus")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    emit = Emitter(args.porcelain)
    try:
        code = args.func(args, emit)
    except (SurfresError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # invariant violations surface here
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    emit.flush(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

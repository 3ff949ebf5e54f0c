"""Command line interface.

Exit status: 0 when the instance has a transversal, 1 when it has none,
2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .core import StablineError
from .dual import oracle_feasible, polygon_centroid
from .instance import (
    CoincidentAbscissaError,
    InputError,
    VerticalLine,
    canonicalize,
    parse_instance,
    solve_instance,
)
from .selectors import SelectorMethod
from .stabbing import feasibility
from .svg import emit_svg

EXIT_FEASIBLE, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


def line_json(line) -> Optional[dict]:
    if line is None:
        return None
    if isinstance(line, VerticalLine):
        return {"x": str(line.x)}
    return {"m": str(line.m), "b": str(line.b)}


def point_json(p) -> Optional[dict]:
    return None if p is None else {"m": str(p.m), "b": str(p.b)}


def _emit(obj) -> None:
    print(json.dumps(obj))


def _load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(data)


def cmd_check(args) -> int:
    doc = _load(args.file)
    try:
        family, cmap = canonicalize(doc)
    except CoincidentAbscissaError as exc:
        _emit({"feasible": False, "unique": False, "note": str(exc)})
        return EXIT_INFEASIBLE
    report = feasibility(family)
    out = {"feasible": report.feasible, "unique": report.unique}
    if report.feasible:
        out["witness"] = line_json(cmap.line_to_original(report.witness))
    _emit(out)
    return EXIT_FEASIBLE if report.feasible else EXIT_INFEASIBLE


def _infeasible(result) -> int:
    msg = "no non-vertical line stabs every segment"
    if result.note:
        msg += f" ({result.note})"
    print(f"stabline: {msg}", file=sys.stderr)
    return EXIT_INFEASIBLE


def cmd_solve(args) -> int:
    result = solve_instance(_load(args.file))
    if not result.feasible:
        return _infeasible(result)
    _emit(line_json(result.lines[SelectorMethod(args.method)]))
    return EXIT_FEASIBLE


def cmd_polygon(args) -> int:
    result = solve_instance(_load(args.file))
    poly = result.polygon
    out = {
        "vertices": [point_json(v) for v in poly],
        "classification": poly.classification.value,
        "area": str(result.area),
        "centroid": point_json(polygon_centroid(poly)),
    }
    if result.note:
        out["note"] = result.note
    _emit(out)
    return EXIT_FEASIBLE if result.feasible else EXIT_INFEASIBLE


def cmd_plot(args) -> int:
    doc = _load(args.file)
    result = solve_instance(doc)
    methods = None
    if args.methods:
        try:
            methods = [SelectorMethod(m.strip()) for m in args.methods.split(",") if m.strip()]
        except ValueError as exc:
            raise InputError(f"--methods: {exc}") from None
    svg = emit_svg(doc, result, "dual" if args.dual else "primal", methods)
    Path(args.out).write_bytes(svg)
    return EXIT_FEASIBLE if result.feasible else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    doc = _load(args.file)
    try:
        family, _ = canonicalize(doc)
    except CoincidentAbscissaError as exc:
        _emit({"feasible": False, "point": None, "note": str(exc)})
        return EXIT_INFEASIBLE
    p = oracle_feasible(family)
    _emit({"feasible": p is not None, "point": point_json(p)})
    return EXIT_FEASIBLE if p is not None else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabline",
        description="Common transversals of parallel line segments, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a transversal exists")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="print one selected transversal")
    p.add_argument("file")
    p.add_argument("--method", choices=[m.value for m in SelectorMethod], default="centroid")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("polygon", help="print the dual polygon of all transversals")
    p.add_argument("file")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("plot", help="write an SVG drawing")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--dual", action="store_true", help="draw the slope/intercept plane")
    p.add_argument("--methods", help="comma-separated selector methods to draw")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("oracle", help="brute-force feasibility (for testing)")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StablineError as exc:
        print(f"stabline: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

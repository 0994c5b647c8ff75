"""Command-line interface: ``latticetri <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import analysis
from .centers import (
    DegenerateTriangleError,
    EulerLineUndefinedError,
    Triangle,
    area_twice,
    centroid,
    circumcenter,
    circumradius_squared,
    euler_line,
    orthocenter,
)
from .conditions import CONDITION_LABELS, CONDITION_NAMES, classify, primitive_gcd
from .exact_arith import format_rational, int_sqrt_exact
from .figure import PRESETS, SHOW_ALL, FigureSpec, render_svg
from .flagexpr import FlagExpressionError, compile_expr

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_COUNTEREXAMPLE = 4
EXIT_IO = 5


class CliError(Exception):
    def __init__(self, message: str, code: int, output: Optional[str] = None):
        super().__init__(message)
        self.code = code
        self.output = output


def _rational_json(q) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _point_json(p) -> dict:
    return {"x": _rational_json(p.x), "y": _rational_json(p.y)}


def _point_text(p) -> str:
    return f"{format_rational(p.x)},{format_rational(p.y)}"


def _triangle(coords: List[int]) -> Triangle:
    try:
        return Triangle.from_coords(coords)
    except DegenerateTriangleError as exc:
        raise CliError(f"degenerate triangle: {exc}", EXIT_DEGENERATE) from None


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def centers_report(t: Triangle) -> dict:
    """Exact centers in the JSON layout used by ``centers --format json``."""
    r2 = circumradius_squared(t)
    r = int_sqrt_exact(r2.numerator) if r2.denominator == 1 else None
    try:
        line = euler_line(t)
        line_json = {"a": line.a, "b": line.b, "c": line.c}
        lattice = line.lattice_point()
    except EulerLineUndefinedError:
        line_json, lattice = None, None
    return {
        "F": _point_json(circumcenter(t)),
        "G": _point_json(centroid(t)),
        "H": _point_json(orthocenter(t)),
        "area2": area_twice(t),
        "R2": _rational_json(r2),
        "R": None if r is None else str(r),
        "euler_line": line_json,
        "euler_lattice_point": None if lattice is None else list(lattice),
    }


def cmd_centers(args) -> str:
    t = _triangle(args.vertices)
    rep = centers_report(t)
    if args.format == "json":
        return json.dumps(rep, indent=1) + "\n"
    f, g, h = circumcenter(t), centroid(t), orthocenter(t)
    area = format_rational(Fraction(area_twice(t), 2))
    line = rep["euler_line"]
    line_text = "undefined" if line is None else str(euler_line(t))
    if args.format == "csv":
        return _csv([
            ["F", "G", "H", "area", "R2", "R", "euler_line"],
            [_point_text(f), _point_text(g), _point_text(h), area,
             format_rational(circumradius_squared(t)), rep["R"] or "", line_text],
        ])
    lp = rep["euler_lattice_point"]
    return "\n".join([
        f"triangle  {t}",
        f"F = {_point_text(f)}",
        f"G = {_point_text(g)}",
        f"H = {_point_text(h)}",
        f"area = {area}",
        f"R2 = {format_rational(circumradius_squared(t))}",
        f"R = {rep['R'] if rep['R'] is not None else 'not an integer'}",
        f"euler line: {line_text}",
        f"euler line lattice point: {'none' if lp is None else tuple(lp)}",
    ]) + "\n"


def cmd_classify(args) -> str:
    t = _triangle(args.vertices)
    cv = classify(t)
    gcd = primitive_gcd(t)
    try:
        lattice = euler_line(t).lattice_point()
    except EulerLineUndefinedError:
        lattice = None
    if args.format == "json":
        return json.dumps({"bits": cv.bits(), **cv.to_dict(), "primitive_gcd": gcd,
                           "euler_line_has_lattice_point": lattice is not None}, indent=1) + "\n"
    if args.format == "csv":
        return _csv([["bits", *CONDITION_NAMES, "primitive_gcd"],
                     [cv.bits(), *(int(v) for v in cv.to_dict().values()), gcd]])
    lines = [f"triangle  {t}", f"bits {cv.bits()}  (order: {' '.join(CONDITION_LABELS)})"]
    lines += [f"  {name:<22}{'yes' if flag else 'no'}" for name, flag in cv.to_dict().items()]
    lines.append(f"primitive gcd {gcd}")
    if lattice is None:
        lines.append("note: the Euler line contains no lattice point")
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> str:
    try:
        pred = compile_expr(args.where) if args.where else None
    except FlagExpressionError as exc:
        raise CliError(f"bad --where expression: {exc}", EXIT_PARSE) from None
    hits = list(analysis.scan(args.bound, pred, args.limit,
                              primitive_only=args.primitive, dedupe=args.dedupe))
    if args.format == "json":
        return json.dumps([{"triangle": list(t.as_tuple()), "bits": cv.bits()} for t, cv in hits],
                          indent=1) + "\n"
    if args.format == "csv":
        return _csv([["x1", "y1", "x2", "y2", "x3", "y3", "bits"]]
                    + [[*t.as_tuple(), cv.bits()] for t, cv in hits])
    return "".join(f"{' '.join(map(str, t.as_tuple()))}  {cv.bits()}\n" for t, cv in hits)


def cmd_verify(args) -> str:
    reports = analysis.verify_all(args.bound, args.threads)
    if args.format == "json":
        text = json.dumps([r.to_dict(args.timing) for r in reports], indent=1) + "\n"
    elif args.format == "csv":
        text = _csv([["theorem_id", "bound", "triangles_checked", "antecedent_count", "counterexample"]]
                    + [[r.theorem_id, r.bound, r.triangles_checked, r.antecedent_count,
                        "" if r.passed else " ".join(map(str, r.counterexample.as_tuple()))]
                       for r in reports])
    else:
        text = "".join(f"{r}\n" for r in reports)
    if not all(r.passed for r in reports):
        raise CliError("verification found a counterexample", EXIT_COUNTEREXAMPLE, text)
    return text


def cmd_implications(args) -> str:
    table = analysis.mine_implications(args.bound, args.threads, dedupe=args.dedupe)
    if args.format == "json":
        return table.to_json() + "\n"
    if args.format == "csv":
        rows = [["antecedent", "consequent", "status", "witness", "antecedent_count", "proved"]]
        for e in table.to_dict()["entries"]:
            rows.append(["&".join(e["antecedent"]), e["consequent"], e["status"],
                         "" if e["witness"] is None else " ".join(map(str, e["witness"])),
                         e["antecedent_count"], int(e["proved"])])
        return _csv(rows)
    return table.to_text() + "\n"


def cmd_figure(args) -> str:
    if args.preset:
        t = PRESETS[args.preset]
    elif args.vertices:
        t = _triangle(args.vertices)
    else:
        raise CliError("figure needs --preset or --vertices", EXIT_PARSE)
    show = SHOW_ALL if args.show is None else frozenset(s for s in args.show.split(",") if s)
    try:
        spec = FigureSpec(t, show, args.width, args.height)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    return render_svg(spec)


def _add_common(p: argparse.ArgumentParser, defaults: bool) -> None:
    # subcommands re-declare the global flags with SUPPRESS so a value given
    # before the subcommand is not overwritten by the subparser default
    def d(value):
        return value if defaults else argparse.SUPPRESS

    p.add_argument("--format", choices=("text", "json", "csv"), default=d("text"))
    p.add_argument("--out", default=d(None), help="write output to this path instead of stdout")
    p.add_argument("--threads", type=int, default=d(1))
    p.add_argument("--bound", type=int, default=d(10))
    p.add_argument("--dedupe", action="store_true", default=d(False), help="one triangle per symmetry orbit")
    p.add_argument("--primitive", action="store_true", default=d(False), help="only primitive triangles")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, defaults=False)

    parser = argparse.ArgumentParser(prog="latticetri",
                                     description="Exact centers and integrality conditions of lattice triangles.")
    _add_common(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centers", parents=[common], help="exact F, G, H, area, R and Euler line")
    p.add_argument("vertices", nargs=6, type=int, metavar="N")
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("classify", parents=[common], help="the six condition flags")
    p.add_argument("vertices", nargs=6, type=int, metavar="N")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", parents=[common], help="list triangles matching a flag expression")
    p.add_argument("--where", help='e.g. "h & !f"')
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="check the theorems exhaustively")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("implications", parents=[common], help="mine the 192-entry implication table")
    p.set_defaults(func=cmd_implications)

    p = sub.add_parser("figure", parents=[common], help="SVG drawing of a triangle")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--vertices", nargs=6, type=int, metavar="N")
    p.add_argument("--show", help="comma list from: " + ",".join(sorted(SHOW_ALL)))
    p.add_argument("--width", type=int, default=480)
    p.add_argument("--height", type=int, default=480)
    p.set_defaults(func=cmd_figure)
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from None


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.bound < 1:
        print("error: --bound must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        _emit(args.func(args), args.out)
    except CliError as exc:
        if exc.output is not None:
            try:
                _emit(exc.output, args.out)
            except CliError:
                pass
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 verification failed,
3 unsupported polygon class.  Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import run_bench, to_csv
from .decomposition import Monotone, vertical_decompose
from .errors import GenerationFailed, RouteOutside, UnsupportedClass, ValidationError
from .generator import GenSpec, generate
from .geometry import OrthoPolygon
from .io import decomposition_to_dict, dumps, parse_polygon, parse_route, polygon_to_dict, render_svg, route_to_dict
from .oracle import coverage
from .partition import partition_balanced
from .path_polygons import route_split, split_at_reflex
from .route import OrthoRoute, select_aligns, solve_decomposition

EXIT_OK, EXIT_INVALID, EXIT_UNCOVERED, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which would read as "verification failed"
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="owrp", description="Minimum-bend orthogonal watchman routes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="check a polygon file")
    v.add_argument("input")

    d = sub.add_parser("decompose", help="vertical decomposition as JSON")
    d.add_argument("input")
    d.add_argument("--partition", action="store_true", help="include balanced sub-polygons and aligns")
    d.add_argument("--svg", metavar="OUT")

    r = sub.add_parser("route", help="compute a route")
    r.add_argument("input")
    r.add_argument("-o", "--output", metavar="OUT")
    r.add_argument("--no-trim", action="store_true")
    r.add_argument("--path-mode", choices=["auto", "on", "off"], default="auto")
    r.add_argument("--svg", metavar="OUT")

    c = sub.add_parser("verify", help="check that a route sees the whole polygon")
    c.add_argument("input")
    c.add_argument("route")
    c.add_argument("--resolution", type=int, default=4)

    g = sub.add_parser("gen", help="generate a polygon")
    g.add_argument("--columns", type=int, default=1)
    g.add_argument("--max-height", type=int, default=4)
    g.add_argument("--seed", type=int)
    g.add_argument("--path", action="store_true")
    g.add_argument("--rects", type=int, default=0)

    b = sub.add_parser("bench", help="pipeline runtime scaling as CSV")
    b.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    b.add_argument("--seed", type=int)
    b.add_argument("--repeats", type=int, default=3)
    return p


def _seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("OWRP_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"OWRP_SEED is not an integer: {env!r}") from None


def _read_polygon(path: str) -> OrthoPolygon:
    return parse_polygon(_read(path))


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None:
        out.write(text)
    else:
        Path(path).write_text(text)


def _route(poly: OrthoPolygon, trim: bool, mode: str) -> tuple[OrthoRoute, int, object]:
    """Route, total balanced sub-polygon count, and decomposition."""
    d = vertical_decompose(poly)
    monotone = isinstance(d.kind, Monotone)
    if mode == "off" and not monotone:
        raise UnsupportedClass("polygon is not x-monotone (path mode is off)")
    if monotone and mode != "on":
        res = solve_decomposition(d, trim)
        return res.route, res.partition.k, d
    pd = split_at_reflex(d)
    k = sum(partition_balanced(p.decomposition).k for p in pd.pieces)
    return route_split(pd, trim), k, d


def _cmd_validate(args, out, err) -> int:
    poly = _read_polygon(args.input)
    out.write(dumps({"valid": True, "n": poly.n, "area": poly.area}))
    return EXIT_OK


def _cmd_decompose(args, out, err) -> int:
    poly = _read_polygon(args.input)
    d = vertical_decompose(poly)
    data = {"n": poly.n, **decomposition_to_dict(d)}
    if args.partition:
        if isinstance(d.kind, Monotone):
            part = partition_balanced(d)
            data["partition"] = [s._asdict() for s in part.subs]
            data["aligns"] = select_aligns(part)
        else:
            pieces = []
            for piece in split_at_reflex(d).pieces:
                part = partition_balanced(piece.decomposition)
                pieces.append(
                    {
                        "rects": [[r.x_left, r.x_right, r.bottom, r.top] for r in piece.rects],
                        "partition": [s._asdict() for s in part.subs],
                        "aligns": select_aligns(part),
                    }
                )
            data["pieces"] = pieces
    out.write(dumps(data))
    if args.svg:
        _write(args.svg, render_svg(poly, d), out)
    return EXIT_OK


def _cmd_route(args, out, err) -> int:
    poly = _read_polygon(args.input)
    trim = not args.no_trim
    route, k, d = _route(poly, trim, args.path_mode)
    _write(args.output, dumps(route_to_dict(route, trim, k)), out)
    if args.svg:
        _write(args.svg, render_svg(poly, d, route), out)
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    poly = _read_polygon(args.input)
    route = parse_route(_read(args.route))
    if args.resolution < 1:
        raise UsageError("--resolution must be >= 1")
    try:
        report = coverage(poly, route, args.resolution)
    except RouteOutside as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_UNCOVERED
    out.write(dumps(report.to_dict(limit=None)))
    if not report.covered:
        err.write(f"verification failed: {len(report.uncovered)} of {report.samples_total} samples unseen\n")
        return EXIT_UNCOVERED
    return EXIT_OK


def _cmd_gen(args, out, err) -> int:
    mode = "path" if args.path else "monotone"
    try:
        spec = GenSpec(args.columns, args.max_height, _seed(args.seed), mode, rects=args.rects)
        poly = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(dumps(polygon_to_dict(poly)))
    return EXIT_OK


def _cmd_bench(args, out, err) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes list: {args.sizes!r}") from None
    if not sizes or min(sizes) < 4 or args.repeats < 1:
        raise UsageError("sizes must be >= 4 and repeats >= 1")
    rows, slope = run_bench(sizes, _seed(args.seed), args.repeats)
    out.write(to_csv(rows, slope))
    return EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "decompose": _cmd_decompose,
    "route": _cmd_route,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def cli_dispatch(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _parser().parse_args(argv)
        return COMMANDS[args.command](args, out, err)
    except (UsageError, ValidationError, GenerationFailed) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except UnsupportedClass as exc:
        err.write(f"unsupported polygon: {exc}\n")
        return EXIT_UNSUPPORTED


def main() -> None:
    sys.exit(cli_dispatch())

"""Command-line front end.

Subcommands:

  construct <n> [--svg PATH] [--json PATH]   build a polygon and its trace
  table                                      print the classical trig tables
  trig <degrees>                             exact sin/cos/tan of a grid angle
  constructible <n>                          Gauss-Wantzel verdict for n
  icosahedron [--obj PATH] [--digits D]      the golden-rectangle icosahedron
  verify                                     run the exact invariant suite

Exit status: 0 on success, 1 on domain errors (unsupported n, off-grid
angle), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .construct import construct_polygon, trace_to_json
from .constructibility import gauss_constructible
from .exactnum import approx
from .geom import dist_sq
from .icosahedron import build_icosahedron, export_mesh, verify_icosahedron
from .selfcheck import run_all_checks
from .svg import RenderConfig, render_svg
from .trig import Angle, sin_cos, tan

__all__ = ["main"]


def _cmd_construct(args) -> int:
    polygon, trace = construct_polygon(args.n)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(trace_to_json(trace))
            fh.write("\n")
    if args.svg:
        cfg = RenderConfig(digits=args.digits, labels=not args.no_labels)
        with open(args.svg, "w") as fh:
            fh.write(render_svg(trace, cfg, polygon=polygon))
    side = dist_sq(polygon.vertices[0], polygon.vertices[1])
    from .exactnum import sqrt

    length = sqrt(side)
    print(f"regular {polygon.n}-gon on the unit circle ({len(trace.steps)} steps)")
    print(f"side length: {length} = {approx(length, 6)}")
    for step, label in ((args.svg, "svg"), (args.json, "json")):
        if step:
            print(f"wrote {label}: {step}")
    return 0


def _print_table(angles: list[int]) -> None:
    headers = ["angle"] + [f"{a}°" for a in angles]
    sines = ["sin"]
    sines_dec = ["  ≈"]
    cosines = ["cos"]
    cosines_dec = ["  ≈"]
    for a in angles:
        s, c = sin_cos(a)
        sines.append(str(s))
        sines_dec.append(approx(s, 6))
        cosines.append(str(c))
        cosines_dec.append(approx(c, 6))
    rows = [headers, sines, sines_dec, cosines, cosines_dec]
    widths = [max(len(row[i]) for row in rows) for i in range(len(headers))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _cmd_table(_args) -> int:
    _print_table([30, 45, 60])
    print()
    _print_table([18, 36, 72])
    return 0


def _cmd_trig(args) -> int:
    try:
        degrees = Fraction(args.degrees)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot read {args.degrees!r} as a rational number of degrees")
    angle = Angle(degrees)
    s, c = sin_cos(angle)
    print(f"sin {degrees}° = {s} = {approx(s, 6)}")
    print(f"cos {degrees}° = {c} = {approx(c, 6)}")
    if degrees != 90:
        t = tan(angle)
        print(f"tan {degrees}° = {t} = {approx(t, 6)}")
    return 0


def _cmd_constructible(args) -> int:
    print(gauss_constructible(args.n))
    return 0


def _cmd_icosahedron(args) -> int:
    mesh = build_icosahedron()
    report = verify_icosahedron(mesh)
    text = export_mesh(mesh, args.digits)
    if args.obj:
        with open(args.obj, "w") as fh:
            fh.write(text)
        print(f"wrote obj: {args.obj}")
    else:
        sys.stdout.write(text)
    print(
        f"icosahedron: {len(mesh.vertices)} vertices, {len(mesh.edges)} edges, "
        f"{len(mesh.faces)} faces; exact checks "
        + ("all pass" if report.ok else "FAILED")
    )
    return 0 if report.ok else 1


def _cmd_verify(_args) -> int:
    report = run_all_checks()
    print(report)
    failed = len(report.failures())
    print(f"{len(report.checks) - failed}/{len(report.checks)} checks passed")
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="straightedge",
        description="Exact straightedge-and-compass constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="construct a regular polygon")
    p.add_argument("n", type=int)
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--digits", type=int, default=5)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("table", help="print the classical trig tables")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("trig", help="exact trig of a 3*m/2^k degree angle")
    p.add_argument("degrees")
    p.set_defaults(func=_cmd_trig)

    p = sub.add_parser("constructible", help="Gauss-Wantzel verdict for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_constructible)

    p = sub.add_parser("icosahedron", help="build and export the icosahedron")
    p.add_argument("--obj", metavar="PATH")
    p.add_argument("--digits", type=int, default=6)
    p.set_defaults(func=_cmd_icosahedron)

    p = sub.add_parser("verify", help="run the exact invariant suite")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

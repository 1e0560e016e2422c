"""Replayable straightedge-and-compass programs for regular polygons.

A construction is a trace: an ordered list of primitive steps (place the
two seed points, draw a line, set the compass, intersect, select one
intersection by an explicit rule).  Replaying the steps from scratch
rebuilds every labeled object exactly, and the only numeric literals in any
trace are the seed points A = (1, 0) and A' = (-1, 0); every other object
is an intersection.

Supported polygons: the triangle and square from the classical mediatrix
moves, the pentagon via the golden-ratio compass program, and the hexagon,
decagon and icosagon obtained by running the same programs simultaneously
from several anchors.  Doubling any polygon (side mediatrices against the
circumcircle) covers the n -> 2n rule.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cmp_to_key

from .exactnum import Constructible, ONE, ZERO, parse, sign
from .geom import (
    Circle,
    Line,
    Point,
    dist_sq,
    intersect_circles,
    intersect_line_circle,
    intersect_lines,
    perpendicular_bisector,
)
from .reporting import Check, Report
from .trig import side_length

__all__ = [
    "Step",
    "Trace",
    "Polygon",
    "SUPPORTED_POLYGONS",
    "construct_polygon",
    "double_polygon",
    "verify_regular",
    "replay",
    "trace_to_dict",
    "trace_to_json",
    "steps_from_dict",
]

SUPPORTED_POLYGONS = (3, 4, 5, 6, 10, 20)


@dataclass(frozen=True)
class Step:
    kind: str  # place-point | line | circle | intersect | select
    inputs: tuple[str, ...]
    output: str
    selector: str | None = None
    coords: tuple[str, str] | None = None  # canonical renderings, place-point only


@dataclass
class Trace:
    steps: list[Step]
    bindings: dict[str, object]


@dataclass(frozen=True)
class Polygon:
    n: int
    vertices: tuple[Point, ...]
    center: Point

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if len(self.vertices) != self.n:
            raise ValueError(f"expected {self.n} vertices, got {len(self.vertices)}")


# -- selector semantics --------------------------------------------------------

_ON_SEGMENT = re.compile(r"on-segment\(([^,()]+),([^,()]+)\)")


def _between(value, lo, hi) -> bool:
    if sign(lo - hi) > 0:
        lo, hi = hi, lo
    return sign(value - lo) >= 0 and sign(hi - value) >= 0


def _apply_selector(
    candidates: tuple[Point, ...], selector: str, bindings: dict
) -> Point:
    if selector == "lex-min":
        return candidates[0]
    if selector == "lex-max":
        return candidates[-1]
    if selector == "positive-y":
        matches = [p for p in candidates if sign(p.y) > 0]
    elif selector == "negative-y":
        matches = [p for p in candidates if sign(p.y) < 0]
    else:
        m = _ON_SEGMENT.fullmatch(selector)
        if not m:
            raise ValueError(f"unknown selector {selector!r}")
        a = bindings[m.group(1)]
        b = bindings[m.group(2)]
        matches = [
            p
            for p in candidates
            if _between(p.x, a.x, b.x) and _between(p.y, a.y, b.y)
        ]
    if len(matches) != 1:
        raise ValueError(
            f"selector {selector!r} matched {len(matches)} of {len(candidates)} points"
        )
    return matches[0]


def _intersect_objects(o1, o2):
    if isinstance(o1, Line) and isinstance(o2, Line):
        pt = intersect_lines(o1, o2)
        if pt is None:
            raise ValueError("parallel lines do not intersect")
        return pt
    if isinstance(o1, Line) and isinstance(o2, Circle):
        return tuple(intersect_line_circle(o1, o2))
    if isinstance(o1, Circle) and isinstance(o2, Line):
        return tuple(intersect_line_circle(o2, o1))
    if isinstance(o1, Circle) and isinstance(o2, Circle):
        return tuple(intersect_circles(o1, o2))
    raise TypeError("can only intersect lines and circles")


# -- trace building ------------------------------------------------------------


class _Builder:
    def __init__(self):
        self.steps: list[Step] = []
        self.bindings: dict[str, object] = {}

    def _bind(self, step: Step, obj) -> None:
        if step.output in self.bindings:
            raise ValueError(f"duplicate label {step.output!r}")
        self.steps.append(step)
        self.bindings[step.output] = obj

    def place(self, label: str, x, y) -> Point:
        pt = Point(Constructible.of(x), Constructible.of(y))
        self._bind(
            Step("place-point", (), label, coords=(str(pt.x), str(pt.y))), pt
        )
        return pt

    def line(self, label: str, p: str, q: str) -> Line:
        obj = Line(self.bindings[p], self.bindings[q])
        self._bind(Step("line", (p, q), label), obj)
        return obj

    def circle(self, label: str, center: str, through: str) -> Circle:
        obj = Circle(self.bindings[center], self.bindings[through])
        self._bind(Step("circle", (center, through), label), obj)
        return obj

    def intersect(self, label: str, o1: str, o2: str):
        obj = _intersect_objects(self.bindings[o1], self.bindings[o2])
        self._bind(Step("intersect", (o1, o2), label), obj)
        return obj

    def select(self, label: str, pair: str, selector: str) -> Point:
        pt = _apply_selector(self.bindings[pair], selector, self.bindings)
        self._bind(Step("select", (pair,), label, selector=selector), pt)
        return pt

    def select_wanted(self, label: str, pair: str, wanted: Point) -> Point:
        """Pick a selector that singles out ``wanted`` among the candidates."""
        candidates = self.bindings[pair]
        signs = [sign(p.y) for p in candidates]
        if len(candidates) == 2 and signs[0] * signs[1] < 0:
            selector = "positive-y" if sign(wanted.y) > 0 else "negative-y"
        elif wanted == candidates[0]:
            selector = "lex-min"
        else:
            selector = "lex-max"
        pt = self.select(label, pair, selector)
        if pt != wanted:
            raise AssertionError(f"selector {selector} picked the wrong point")
        return pt

    def select_other(self, label: str, pair: str, avoid: Point) -> Point:
        others = [p for p in self.bindings[pair] if p != avoid]
        if len(others) != 1:
            raise AssertionError("expected exactly one non-anchor intersection")
        return self.select_wanted(label, pair, others[0])

    def mediatrix(self, label: str, p: str, q: str, aux: str) -> Line:
        """Perpendicular bisector of p q by the two-circle move; ``aux`` is a
        prefix for the helper labels."""
        self.circle(f"{aux}1", p, q)
        self.circle(f"{aux}2", q, p)
        self.intersect(f"{aux}X", f"{aux}1", f"{aux}2")
        self.select(f"{aux}P", f"{aux}X", "lex-min")
        self.select(f"{aux}Q", f"{aux}X", "lex-max")
        return self.line(label, f"{aux}P", f"{aux}Q")

    def trace(self) -> Trace:
        return Trace(list(self.steps), dict(self.bindings))


def replay(steps: list[Step]) -> Trace:
    """Re-execute a step list from scratch; bindings are rebuilt exactly."""
    b = _Builder()
    for step in steps:
        if step.kind == "place-point":
            b.place(step.output, parse(step.coords[0]), parse(step.coords[1]))
        elif step.kind == "line":
            b.line(step.output, *step.inputs)
        elif step.kind == "circle":
            b.circle(step.output, *step.inputs)
        elif step.kind == "intersect":
            b.intersect(step.output, *step.inputs)
        elif step.kind == "select":
            b.select(step.output, step.inputs[0], step.selector)
        else:
            raise ValueError(f"unknown step kind {step.kind!r}")
    return b.trace()


# -- trace serialization --------------------------------------------------------


def _render_object(obj) -> dict:
    if isinstance(obj, Point):
        return {"type": "point", "x": str(obj.x), "y": str(obj.y)}
    if isinstance(obj, Line):
        a, b, c = obj.coefficients
        return {"type": "line", "a": str(a), "b": str(b), "c": str(c)}
    if isinstance(obj, Circle):
        return {
            "type": "circle",
            "cx": str(obj.center.x),
            "cy": str(obj.center.y),
            "radius_sq": str(obj.radius_sq),
        }
    if isinstance(obj, tuple):
        return {"type": "points", "items": [_render_object(p) for p in obj]}
    raise TypeError(f"cannot render {type(obj).__name__}")


def trace_to_dict(trace: Trace) -> dict:
    steps = []
    for s in trace.steps:
        entry: dict = {"kind": s.kind, "inputs": list(s.inputs), "output": s.output}
        if s.selector is not None:
            entry["selector"] = s.selector
        if s.coords is not None:
            entry["coords"] = {"x": s.coords[0], "y": s.coords[1]}
        steps.append(entry)
    bindings = {label: _render_object(obj) for label, obj in trace.bindings.items()}
    return {"steps": steps, "bindings": bindings}


def trace_to_json(trace: Trace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2)


def steps_from_dict(data: dict) -> list[Step]:
    steps = []
    for entry in data["steps"]:
        coords = entry.get("coords")
        steps.append(
            Step(
                entry["kind"],
                tuple(entry["inputs"]),
                entry["output"],
                selector=entry.get("selector"),
                coords=(coords["x"], coords["y"]) if coords else None,
            )
        )
    return steps


# -- vertex ordering -------------------------------------------------------------


def _arc_bucket(p: Point) -> int:
    sy = sign(p.y)
    if sy == 0:
        return 0 if sign(p.x) > 0 else 2
    return 1 if sy > 0 else 3


def _cmp_ccw(p: Point, q: Point) -> int:
    b1, b2 = _arc_bucket(p), _arc_bucket(q)
    if b1 != b2:
        return b1 - b2
    c = sign(p.x - q.x)
    # Upper arc runs right to left, lower arc left to right.
    return -c if b1 == 1 else c


def _ccw_sorted(points: list[Point]) -> list[Point]:
    return sorted(points, key=cmp_to_key(_cmp_ccw))


def _dedupe(points: list[Point]) -> list[Point]:
    unique: list[Point] = []
    for p in points:
        if all(p != q for q in unique):
            unique.append(p)
    return unique


# -- the construction programs ----------------------------------------------------


def _prelude(b: _Builder) -> None:
    # Seed segment, its mediatrix, the midpoint O and the unit circle K.
    b.place("A", ONE, ZERO)
    b.place("A'", -ONE, ZERO)
    b.line("AA'", "A", "A'")
    b.circle("c1", "A", "A'")
    b.circle("c2", "A'", "A")
    b.intersect("IM", "c1", "c2")
    b.select("P1", "IM", "positive-y")
    b.select("P2", "IM", "negative-y")
    b.line("m", "P1", "P2")
    b.intersect("O", "m", "AA'")
    b.circle("K", "O", "A")


def _pentagon_radius_circle(b: _Builder) -> None:
    """The golden-ratio compass setting: the circle centered O with radius
    OC = (sqrt(5)-1)/2, built from B with OB = 1/2 on the mediatrix."""
    b.intersect("IT", "m", "K")
    b.select("T", "IT", "positive-y")
    b.select("T'", "IT", "negative-y")
    # Midpoint of OT: the circle centered O through T is K itself, so one
    # new circle suffices for the mediatrix.
    b.circle("cT", "T", "O")
    b.intersect("IQ", "K", "cT")
    b.select("Q1", "IQ", "lex-min")
    b.select("Q2", "IQ", "lex-max")
    b.line("mB", "Q1", "Q2")
    b.intersect("B", "mB", "m")  # (0, 1/2): OB is half the radius
    b.circle("cB", "B", "A")  # radius AB = sqrt(5)/2
    b.intersect("IC", "m", "cB")
    b.select("C", "IC", "negative-y")  # OC = AB - 1/2, the golden ratio
    b.circle("cg", "O", "C")


def _pentagon_from(b: _Builder, anchor: str, d_pair: str, tag: str) -> list[Point]:
    """Run the pentagon program anchored at a unit-circle point.

    ``d_pair`` must hold the intersections of the golden-radius circle with
    the line through O and the anchor; the five vertices come back in no
    particular order.
    """
    anchor_pt = b.bindings[anchor]
    b.select(f"D{tag}", d_pair, f"on-segment(O,{anchor})")
    b.mediatrix(f"mD{tag}", "O", f"D{tag}", f"d{tag}")
    b.intersect(f"IF{tag}", f"mD{tag}", "K")
    candidates = b.bindings[f"IF{tag}"]
    f1 = b.select_wanted(f"F{tag}", f"IF{tag}", candidates[-1])
    f2 = b.select_wanted(f"F{tag}'", f"IF{tag}", candidates[0])
    b.circle(f"cF{tag}", f"F{tag}", anchor)
    b.intersect(f"IG{tag}", f"cF{tag}", "K")
    g1 = b.select_other(f"G{tag}", f"IG{tag}", anchor_pt)
    b.circle(f"cF{tag}'", f"F{tag}'", anchor)
    b.intersect(f"IG{tag}'", f"cF{tag}'", "K")
    g2 = b.select_other(f"G{tag}'", f"IG{tag}'", anchor_pt)
    return [anchor_pt, f1, f2, g1, g2]


def construct_polygon(n: int) -> tuple[Polygon, Trace]:
    """Construct the regular n-gon inscribed in the unit circle.

    Vertices are returned counterclockwise starting from (1, 0), together
    with the full compass-and-straightedge trace that produced them.
    """
    if n not in SUPPORTED_POLYGONS:
        raise ValueError(
            f"no construction program for n = {n}; supported: "
            f"{', '.join(map(str, SUPPORTED_POLYGONS))} "
            "(check gauss_constructible(n) for whether a construction exists)"
        )
    b = _Builder()
    _prelude(b)
    a = b.bindings["A"]
    a2 = b.bindings["A'"]

    if n == 3:
        b.circle("c3", "A'", "O")
        b.intersect("IB", "c3", "K")
        v1 = b.select("B", "IB", "positive-y")
        v2 = b.select("B'", "IB", "negative-y")
        vertices = [a, v1, v2]
    elif n == 4:
        b.intersect("IB", "m", "K")
        v1 = b.select("B", "IB", "positive-y")
        v2 = b.select("B'", "IB", "negative-y")
        vertices = [a, v1, a2, v2]
    elif n == 6:
        b.circle("c3", "A'", "O")
        b.intersect("IB", "c3", "K")
        v1 = b.select("B", "IB", "positive-y")
        v2 = b.select("B'", "IB", "negative-y")
        b.circle("c4", "A", "O")
        b.intersect("IC", "c4", "K")
        v3 = b.select("C", "IC", "positive-y")
        v4 = b.select("C'", "IC", "negative-y")
        vertices = [a, v1, v2, a2, v3, v4]
    else:
        _pentagon_radius_circle(b)
        b.intersect("ID", "cg", "AA'")
        vertices = _pentagon_from(b, "A", "ID", "")
        if n >= 10:
            vertices += _pentagon_from(b, "A'", "ID", "b")
        if n == 20:
            b.intersect("IDm", "cg", "m")
            vertices += _pentagon_from(b, "T", "IDm", "c")
            vertices += _pentagon_from(b, "T'", "IDm", "d")

    vertices = _ccw_sorted(_dedupe(vertices))
    if len(vertices) != n:
        raise AssertionError(f"construction produced {len(vertices)} vertices")
    polygon = Polygon(n=n, vertices=tuple(vertices), center=b.bindings["O"])
    return polygon, b.trace()


def double_polygon(p: Polygon) -> Polygon:
    """The 2n-gon: each side's mediatrix cuts the circumcircle on the side's
    arc, and the new vertex interleaves the side's endpoints."""
    circum = Circle(p.center, p.vertices[0])
    doubled: list[Point] = []
    for i, v in enumerate(p.vertices):
        w = p.vertices[(i + 1) % p.n]
        bisector = perpendicular_bisector(v, w)
        candidates = intersect_line_circle(bisector, circum)
        mx = (v.x + w.x) / 2 - p.center.x
        my = (v.y + w.y) / 2 - p.center.y
        arc = [
            c
            for c in candidates
            if sign((c.x - p.center.x) * mx + (c.y - p.center.y) * my) > 0
        ]
        if len(arc) != 1:
            raise AssertionError("side mediatrix must cut the arc exactly once")
        doubled += [v, arc[0]]
    return Polygon(n=2 * p.n, vertices=tuple(doubled), center=p.center)


def verify_regular(p: Polygon) -> Report:
    """Exact regularity report: unit radii, equal chords, distinct vertices,
    and (when 180/n is on the trig grid) the chord against 2*sin(180/n)."""
    checks: list[Check] = []

    bad_radius = [
        i for i, v in enumerate(p.vertices) if sign(dist_sq(v, p.center) - 1) != 0
    ]
    checks.append(
        Check(
            "all vertices at exact distance 1 from the center",
            not bad_radius,
            f"vertices off the unit circle: {bad_radius}" if bad_radius else "",
        )
    )

    chords = [
        dist_sq(p.vertices[i], p.vertices[(i + 1) % p.n]) for i in range(p.n)
    ]
    bad_chords = [i for i, d in enumerate(chords) if sign(d - chords[0]) != 0]
    checks.append(
        Check(
            "all consecutive chords exactly equal",
            not bad_chords,
            f"unequal chords at: {bad_chords}" if bad_chords else "",
        )
    )

    duplicates = any(
        p.vertices[i] == p.vertices[j]
        for i in range(p.n)
        for j in range(i + 1, p.n)
    )
    checks.append(Check("vertices pairwise distinct", not duplicates))

    try:
        expected = side_length(p.n)
    except ValueError:
        expected = None
    if expected is not None:
        match = sign(chords[0] - expected * expected) == 0
        checks.append(
            Check(
                f"chord equals 2*sin(180/{p.n}) from the trig tables",
                match,
                "" if match else f"chord^2 = {chords[0]}, expected {expected}^2",
            )
        )
    return Report(tuple(checks))

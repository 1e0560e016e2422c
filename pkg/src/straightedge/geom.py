"""2D objects over exact coordinates and the straightedge/compass primitives.

Only three intersection operations exist -- line/line, line/circle and
circle/circle -- because that is all the two instruments can do.  Circles
carry compass semantics (a center and a point the pencil goes through), so
every radius is constructible by definition.  All intersection points
satisfy their defining equations exactly and multi-point results are sorted
lexicographically by exact comparison, which makes every construction
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .exactnum import Constructible, ONE, ZERO, sign, sqrt

__all__ = [
    "Point",
    "Line",
    "Circle",
    "dist_sq",
    "midpoint",
    "intersect_lines",
    "intersect_line_circle",
    "intersect_circles",
    "perpendicular_bisector",
]


@dataclass(frozen=True)
class Point:
    x: Constructible
    y: Constructible

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Constructible.of(x), Constructible.of(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def dist_sq(p: Point, q: Point) -> Constructible:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def _cmp_lex(p: Point, q: Point) -> int:
    c = sign(p.x - q.x)
    if c:
        return c
    return sign(p.y - q.y)


def _sorted_points(points: list[Point]) -> list[Point]:
    return sorted(points, key=cmp_to_key(_cmp_lex))


@dataclass(frozen=True)
class Line:
    """Line through two distinct points.

    Canonical coefficients (a, b, c) of a*x + b*y = c are derived with the
    first nonzero coefficient scaled to +1, so two Line objects describe the
    same point set exactly when their coefficient triples are equal.
    """

    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("a line needs two distinct points")
        a0 = self.q.y - self.p.y
        b0 = self.p.x - self.q.x
        c0 = a0 * self.p.x + b0 * self.p.y
        if sign(a0) != 0:
            coeffs = (ONE, b0 / a0, c0 / a0)
        else:
            coeffs = (ZERO, ONE, c0 / b0)
        object.__setattr__(self, "_coeffs", coeffs)

    @property
    def coefficients(self) -> tuple[Constructible, Constructible, Constructible]:
        return self._coeffs

    def eval_at(self, pt: Point) -> Constructible:
        a, b, c = self._coeffs
        return a * pt.x + b * pt.y - c

    def contains(self, pt: Point) -> bool:
        return sign(self.eval_at(pt)) == 0


@dataclass(frozen=True)
class Circle:
    """Compass circle: a center and a point on the circumference."""

    center: Point
    through: Point

    def __post_init__(self):
        if self.center == self.through:
            raise ValueError("a circle through its own center has zero radius")
        object.__setattr__(self, "_radius_sq", dist_sq(self.center, self.through))

    @property
    def radius_sq(self) -> Constructible:
        return self._radius_sq

    def power_at(self, pt: Point) -> Constructible:
        return dist_sq(pt, self.center) - self._radius_sq

    def contains(self, pt: Point) -> bool:
        return sign(self.power_at(pt)) == 0


def intersect_lines(l1: Line, l2: Line) -> Point | None:
    """Unique intersection point, or None for parallel distinct lines.

    Coincident lines have no single answer and raise instead.
    """
    a1, b1, c1 = l1.coefficients
    a2, b2, c2 = l2.coefficients
    det = a1 * b2 - a2 * b1
    if sign(det) == 0:
        if (a1, b1, c1) == (a2, b2, c2):
            raise ValueError("coincident lines meet everywhere")
        return None
    x = (c1 * b2 - c2 * b1) / det
    y = (a1 * c2 - a2 * c1) / det
    return Point(x, y)


def _quadratic_roots(qa, qb, qc) -> list[Constructible]:
    """Exact real roots of qa*t^2 + qb*t + qc with qa != 0.

    A rational root at 0 or +-1 is peeled off by Vieta first, so the other
    root stays inside the coefficients' tower instead of forcing a radical
    whose squaredness the representation can no longer see.  This is the
    common case for construction circles that pass through a known vertex.
    """
    for probe, value in ((ZERO, qc), (ONE, qa + qb + qc), (-ONE, qa - qb + qc)):
        if sign(value) == 0:
            if sign(probe) == 0:
                other = -qb / qa
            else:
                other = qc / qa / probe
            if other == probe:
                return [probe]
            return [probe, other]
    disc = qb * qb - 4 * qa * qc
    s = sign(disc)
    if s < 0:
        return []
    if s == 0:
        return [-qb / (2 * qa)]
    root = sqrt(disc)
    return [(-qb - root) / (2 * qa), (-qb + root) / (2 * qa)]


def intersect_line_circle(l: Line, c: Circle) -> list[Point]:
    """0, 1 (tangency) or 2 exact intersection points, sorted lexicographically.

    The substitution works on the line's canonical coefficients, not its two
    defining points, so auxiliary radicals from helper constructions never
    leak into the result's representation.
    """
    a, b, cc = l.coefficients
    cx, cy = c.center.x, c.center.y
    if sign(a) != 0:
        # x = cc - b*y (a is normalized to 1)
        u = cc - cx
        qa = b * b + 1
        qb = -2 * (u * b + cy)
        qc = u * u + cy * cy - c.radius_sq
        pts = [Point(cc - b * y, y) for y in _quadratic_roots(qa, qb, qc)]
    else:
        # horizontal line y = cc (b is normalized to 1)
        dy = cc - cy
        qb = -2 * cx
        qc = cx * cx + dy * dy - c.radius_sq
        pts = [Point(x, cc) for x in _quadratic_roots(ONE, qb, qc)]
    return _sorted_points(pts)


def _line_from_coefficients(a, b, c) -> Line:
    if sign(b) != 0:
        p = Point(ZERO, c / b)
        q = Point(ONE, (c - a) / b)
    else:
        p = Point(c / a, ZERO)
        q = Point(c / a, ONE)
    return Line(p, q)


def intersect_circles(c1: Circle, c2: Circle) -> list[Point]:
    """Intersection points via the radical line, sorted lexicographically.

    Concentric circles (equal or not) have no radical line and raise.
    """
    if c1.center == c2.center:
        raise ValueError("concentric circles")
    x1, y1 = c1.center.x, c1.center.y
    x2, y2 = c2.center.x, c2.center.y
    a = 2 * (x2 - x1)
    b = 2 * (y2 - y1)
    c = c1.radius_sq - c2.radius_sq + (x2 * x2 + y2 * y2) - (x1 * x1 + y1 * y1)
    radical = _line_from_coefficients(a, b, c)
    return intersect_line_circle(radical, c1)


def perpendicular_bisector(p: Point, q: Point) -> Line:
    """The mediatrix of pq, built the way a compass does it: through the two
    intersection points of the circles centered at p and q with radius |pq|."""
    if p == q:
        raise ValueError("perpendicular bisector needs two distinct points")
    pts = intersect_circles(Circle(p, q), Circle(q, p))
    return Line(pts[0], pts[1])

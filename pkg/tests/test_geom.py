from fractions import Fraction

import pytest

from straightedge.exactnum import Constructible, sign, sqrt
from straightedge.geom import (
    Circle,
    Line,
    Point,
    intersect_circles,
    intersect_line_circle,
    intersect_lines,
    midpoint,
    perpendicular_bisector,
)

O = Point.of(0, 0)
A = Point.of(1, 0)
A2 = Point.of(-1, 0)
X_AXIS = Line(A2, A)
Y_AXIS = Line(Point.of(0, -1), Point.of(0, 1))
UNIT = Circle(O, A)


class TestObjects:
    def test_line_needs_distinct_points(self):
        with pytest.raises(ValueError):
            Line(A, A)

    def test_circle_rejects_zero_radius(self):
        with pytest.raises(ValueError):
            Circle(A, A)

    def test_canonical_coefficients(self):
        a, b, c = Line(Point.of(0, 2), Point.of(1, 2)).coefficients
        assert (a, b, c) == (0, 1, 2)
        a, b, c = Line(Point.of(3, 0), Point.of(3, 5)).coefficients
        assert (a, b, c) == (1, 0, 3)

    def test_same_line_same_coefficients(self):
        l1 = Line(Point.of(0, 0), Point.of(2, 2))
        l2 = Line(Point.of(5, 5), Point.of(-1, -1))
        assert l1.coefficients == l2.coefficients


class TestLineLine:
    def test_axes_cross_at_origin(self):
        assert intersect_lines(X_AXIS, Y_AXIS) == O

    def test_parallel(self):
        other = Line(Point.of(0, 1), Point.of(1, 1))
        assert intersect_lines(X_AXIS, other) is None

    def test_coincident_raises(self):
        other = Line(Point.of(2, 0), Point.of(3, 0))
        with pytest.raises(ValueError):
            intersect_lines(X_AXIS, other)

    def test_mediatrix_meets_axis_at_midpoint(self):
        # frozen oracle: midpoint of OD by plain coordinate averaging
        g = (sqrt(5) - 1) / 2
        d = Point(g, Constructible.of(0))
        expected = midpoint(O, d)
        got = intersect_lines(perpendicular_bisector(O, d), X_AXIS)
        assert got == expected


class TestLineCircle:
    def test_axis_through_unit_circle(self):
        assert intersect_line_circle(X_AXIS, UNIT) == [A2, A]

    def test_tangent(self):
        tangent = Line(Point.of(1, -1), Point.of(1, 1))
        assert intersect_line_circle(tangent, UNIT) == [A]

    def test_miss(self):
        far = Line(Point.of(2, -1), Point.of(2, 1))
        assert intersect_line_circle(far, UNIT) == []

    def test_pentagon_mediatrix_hits_cos72(self):
        g = (sqrt(5) - 1) / 2
        d = Point(g, Constructible.of(0))
        pts = intersect_line_circle(perpendicular_bisector(O, d), UNIT)
        assert len(pts) == 2
        f_lower, f_upper = pts
        assert f_upper.x == (sqrt(5) - 1) / 4
        assert f_upper.y == sqrt(10 + 2 * sqrt(5)) / 4
        assert f_lower.y == -f_upper.y

    def test_results_satisfy_both_equations(self):
        line = Line(Point.of(Fraction(1, 3), -2), Point.of(Fraction(1, 2), 1))
        circle = Circle(Point.of(Fraction(-1, 2), Fraction(1, 5)), Point.of(1, 1))
        for p in intersect_line_circle(line, circle):
            assert sign(line.eval_at(p)) == 0
            assert sign(circle.power_at(p)) == 0


class TestCircleCircle:
    def test_classic_equilateral_pair(self):
        other = Circle(A, Point.of(2, 0))
        pts = intersect_circles(UNIT, other)
        s3 = sqrt(3)
        assert pts == [
            Point(Constructible.of(Fraction(1, 2)), -s3 / 2),
            Point(Constructible.of(Fraction(1, 2)), s3 / 2),
        ]

    def test_separated(self):
        far = Circle(Point.of(3, 0), Point.of(4, 0))
        assert intersect_circles(UNIT, far) == []

    def test_externally_tangent(self):
        tangent = Circle(Point.of(2, 0), Point.of(3, 0))
        assert intersect_circles(UNIT, tangent) == [A]

    def test_concentric_raises(self):
        bigger = Circle(O, Point.of(2, 0))
        with pytest.raises(ValueError):
            intersect_circles(UNIT, bigger)

    def test_symmetric(self):
        c2 = Circle(A, Point.of(2, 0))
        assert intersect_circles(UNIT, c2) == intersect_circles(c2, UNIT)

    def test_points_on_both_circles(self):
        c2 = Circle(Point.of(Fraction(1, 2), Fraction(1, 3)), Point.of(1, 1))
        for p in intersect_circles(UNIT, c2):
            assert sign(UNIT.power_at(p)) == 0
            assert sign(c2.power_at(p)) == 0

    def test_deterministic(self):
        c2 = Circle(A, A2)
        assert intersect_circles(UNIT, c2) == intersect_circles(UNIT, c2)


class TestPerpendicularBisector:
    def test_horizontal_pair_gives_y_axis(self):
        bis = perpendicular_bisector(A2, A)
        assert bis.coefficients == Y_AXIS.coefficients

    def test_oa_bisector_is_x_half(self):
        bis = perpendicular_bisector(O, A)
        a, b, c = bis.coefficients
        assert (a, b) == (1, 0) and c == Fraction(1, 2)

    def test_pentagon_od_bisector(self):
        # frozen arithmetic oracle: x = OD/2 = (sqrt(5)-1)/4
        g = (sqrt(5) - 1) / 2
        bis = perpendicular_bisector(O, Point(g, Constructible.of(0)))
        a, b, c = bis.coefficients
        assert (a, b) == (1, 0)
        assert c == (sqrt(5) - 1) / 4

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            perpendicular_bisector(A, A)

    def test_through_midpoint_and_perpendicular(self):
        p = Point.of(Fraction(1, 3), 2)
        q = Point.of(Fraction(5, 2), Fraction(-1, 7))
        bis = perpendicular_bisector(p, q)
        assert bis.contains(midpoint(p, q))
        dx1 = bis.q.x - bis.p.x
        dy1 = bis.q.y - bis.p.y
        assert sign(dx1 * (q.x - p.x) + dy1 * (q.y - p.y)) == 0

    def test_equals_analytic_bisector(self):
        p = Point.of(0, 0)
        q = Point.of(2, 2)
        bis = perpendicular_bisector(p, q)
        analytic = Line(Point.of(0, 2), Point.of(2, 0))
        assert bis.coefficients == analytic.coefficients

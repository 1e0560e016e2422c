import json
from fractions import Fraction

import pytest

from straightedge.construct import (
    Polygon,
    SUPPORTED_POLYGONS,
    construct_polygon,
    double_polygon,
    replay,
    steps_from_dict,
    trace_to_dict,
    trace_to_json,
    verify_regular,
)
from straightedge.exactnum import Constructible, sign, sqrt
from straightedge.geom import Point, dist_sq
from straightedge.trig import point_on_circle, side_length


def vertex_set_equal(ps, qs) -> bool:
    return len(ps) == len(qs) and all(any(p == q for q in qs) for p in ps)


class TestConstructPolygon:
    @pytest.mark.parametrize("n", SUPPORTED_POLYGONS)
    def test_regular(self, n):
        poly, _ = construct_polygon(n)
        assert poly.n == n
        assert verify_regular(poly).ok

    @pytest.mark.parametrize("n", SUPPORTED_POLYGONS)
    def test_vertices_match_closed_forms(self, n):
        poly, _ = construct_polygon(n)
        assert poly.vertices[0] == Point.of(1, 0)
        for k, v in enumerate(poly.vertices):
            c, s = point_on_circle(Fraction(360 * k, n))
            assert sign(v.x - c) == 0 and sign(v.y - s) == 0

    def test_side_lengths(self):
        expected = {
            3: sqrt(3),
            4: sqrt(2),
            5: sqrt(10 - 2 * sqrt(5)) / 2,
            10: (sqrt(5) - 1) / 2,
        }
        for n, want in expected.items():
            poly, _ = construct_polygon(n)
            side = sqrt(dist_sq(poly.vertices[0], poly.vertices[1]))
            assert sign(side - want) == 0, n

    def test_pentagon_vertex_f(self):
        poly, _ = construct_polygon(5)
        f = poly.vertices[1]
        assert f.x == (sqrt(5) - 1) / 4
        assert f.y == sqrt(10 + 2 * sqrt(5)) / 4
        ff = sqrt(dist_sq(poly.vertices[1], poly.vertices[4]))
        assert sign(ff - sqrt(10 + 2 * sqrt(5)) / 2) == 0

    def test_golden_ratio_diagonal_over_side(self):
        poly, _ = construct_polygon(5)
        side = sqrt(dist_sq(poly.vertices[0], poly.vertices[1]))
        diagonal = sqrt(dist_sq(poly.vertices[1], poly.vertices[4]))
        assert sign(diagonal - (1 + sqrt(5)) / 2 * side) == 0

    def test_unsupported(self):
        with pytest.raises(ValueError, match="3, 4, 5, 6, 10, 20"):
            construct_polygon(7)
        with pytest.raises(ValueError, match="constructible"):
            construct_polygon(17)


class TestTrace:
    def test_only_seed_literals(self):
        for n in SUPPORTED_POLYGONS:
            _, trace = construct_polygon(n)
            placed = [s for s in trace.steps if s.kind == "place-point"]
            assert [s.output for s in placed] == ["A", "A'"]
            assert all(s.coords is None for s in trace.steps if s.kind != "place-point")

    def test_topological_order(self):
        _, trace = construct_polygon(20)
        seen = set()
        for step in trace.steps:
            assert all(i in seen for i in step.inputs)
            assert step.output not in seen
            seen.add(step.output)

    def test_replay_reproduces_bindings(self):
        for n in (3, 5, 20):
            _, trace = construct_polygon(n)
            again = replay(trace.steps)
            assert set(again.bindings) == set(trace.bindings)
            assert trace_to_dict(again) == trace_to_dict(trace)

    def test_replay_from_json(self):
        _, trace = construct_polygon(5)
        data = json.loads(trace_to_json(trace))
        again = replay(steps_from_dict(data))
        assert trace_to_dict(again) == data

    def test_json_schema(self):
        _, trace = construct_polygon(4)
        data = trace_to_dict(trace)
        assert set(data) == {"steps", "bindings"}
        kinds = {"place-point", "line", "circle", "intersect", "select"}
        for step in data["steps"]:
            assert step["kind"] in kinds
            assert isinstance(step["inputs"], list)
            assert step["output"] in data["bindings"]
        selectors = {s.get("selector") for s in data["steps"] if s["kind"] == "select"}
        assert selectors <= {"lex-min", "lex-max", "positive-y", "negative-y"} | {
            s for s in selectors if s and s.startswith("on-segment(")
        }

    def test_json_deterministic(self):
        _, t1 = construct_polygon(5)
        _, t2 = construct_polygon(5)
        assert trace_to_json(t1) == trace_to_json(t2)

    def test_pentagon_program_landmarks(self):
        _, trace = construct_polygon(5)
        by_label = {s.output: s for s in trace.steps}
        b = trace.bindings
        # OB is half the radius, constructed (not placed)
        assert by_label["B"].kind == "intersect"
        assert b["B"] == Point.of(0, Fraction(1, 2))
        # C on the negative-y side with OC the golden ratio
        assert by_label["C"].selector == "negative-y"
        assert b["C"].y == (1 - sqrt(5)) / 2
        # D on segment OA
        assert by_label["D"].selector == "on-segment(O,A)"
        assert b["D"] == Point((sqrt(5) - 1) / 2, Constructible.of(0))
        # F and F' straddle the axis
        assert by_label["F"].selector == "positive-y"
        assert by_label["F'"].selector == "negative-y"


class TestDoublePolygon:
    def test_triangle_to_hexagon(self):
        p3, _ = construct_polygon(3)
        p6 = double_polygon(p3)
        assert p6.n == 6
        side = sqrt(dist_sq(p6.vertices[0], p6.vertices[1]))
        assert side == 1
        c6, _ = construct_polygon(6)
        assert vertex_set_equal(p6.vertices, c6.vertices)

    def test_pentagon_to_decagon(self):
        p5, _ = construct_polygon(5)
        p10 = double_polygon(p5)
        side = sqrt(dist_sq(p10.vertices[0], p10.vertices[1]))
        assert sign(side - (sqrt(5) - 1) / 2) == 0
        c10, _ = construct_polygon(10)
        assert vertex_set_equal(p10.vertices, c10.vertices)

    def test_hexagon_to_dodecagon(self):
        p6, _ = construct_polygon(6)
        p12 = double_polygon(p6)
        side = sqrt(dist_sq(p12.vertices[0], p12.vertices[1]))
        assert sign(side - (sqrt(6) - sqrt(2)) / 2) == 0
        assert verify_regular(p12).ok

    def test_double_twice_is_icosagon(self):
        p5, _ = construct_polygon(5)
        p20 = double_polygon(double_polygon(p5))
        c20, _ = construct_polygon(20)
        assert vertex_set_equal(p20.vertices, c20.vertices)

    def test_doubled_is_interleaved(self):
        p4, _ = construct_polygon(4)
        p8 = double_polygon(p4)
        assert p8.vertices[0] == p4.vertices[0]
        assert p8.vertices[2] == p4.vertices[1]


class TestVerifyRegular:
    def test_pentagon_passes(self):
        poly, _ = construct_polygon(5)
        report = verify_regular(poly)
        assert report.ok and len(report.checks) >= 3

    def test_perturbed_square_fails_radius(self):
        poly, _ = construct_polygon(4)
        tampered = Polygon(
            4,
            (Point.of(1, Fraction(1, 1000)),) + poly.vertices[1:],
            poly.center,
        )
        report = verify_regular(tampered)
        assert not report.ok
        assert any("distance 1" in c.name for c in report.failures())

    def test_icosagon_chord_is_2_sin_9(self):
        poly, _ = construct_polygon(20)
        chord_sq = dist_sq(poly.vertices[0], poly.vertices[1])
        expected = side_length(20)
        assert sign(chord_sq - expected * expected) == 0
        report = verify_regular(poly)
        assert any("2*sin(180/20)" in c.name and c.passed for c in report.checks)

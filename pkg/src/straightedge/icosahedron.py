"""The regular icosahedron from three mutually perpendicular golden rectangles.

Pacioli's construction: take rectangles with sides in the golden ratio, one
in each coordinate plane, arranged symmetrically about the origin.  With
corners at the cyclic family (0, +-1, +-phi), (+-phi, 0, +-1), (+-1, +-phi, 0)
the twelve corners are the vertices of a regular icosahedron: the shortest
pairwise distance is exactly 2, realized 30 times, and those edges bound 20
equilateral triangles.  Everything is verified by exact sign checks; the
identity phi^2 = phi + 1 does all the work.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactnum import Constructible, approx, sign, sqrt
from .reporting import Check, Report

__all__ = [
    "Point3",
    "GoldenRectangle",
    "IcosaMesh",
    "PHI",
    "golden_rectangles",
    "build_icosahedron",
    "verify_icosahedron",
    "export_mesh",
]

PHI = (1 + sqrt(5)) / 2


@dataclass(frozen=True)
class Point3:
    x: Constructible
    y: Constructible
    z: Constructible

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


def dist_sq3(p: Point3, q: Point3) -> Constructible:
    dx = p.x - q.x
    dy = p.y - q.y
    dz = p.z - q.z
    return dx * dx + dy * dy + dz * dz


def _dot(p: Point3, q: Point3) -> Constructible:
    return p.x * q.x + p.y * q.y + p.z * q.z


def _sub(p: Point3, q: Point3) -> Point3:
    return Point3(p.x - q.x, p.y - q.y, p.z - q.z)


def _det3(u: Point3, v: Point3, w: Point3) -> Constructible:
    return (
        u.x * (v.y * w.z - v.z * w.y)
        - u.y * (v.x * w.z - v.z * w.x)
        + u.z * (v.x * w.y - v.y * w.x)
    )


@dataclass(frozen=True)
class GoldenRectangle:
    corners: tuple[Point3, Point3, Point3, Point3]
    plane: str  # xy | yz | zx

    def side_lengths_sq(self) -> tuple[Constructible, Constructible]:
        a = dist_sq3(self.corners[0], self.corners[1])
        b = dist_sq3(self.corners[1], self.corners[2])
        return (a, b) if sign(a - b) <= 0 else (b, a)


@dataclass(frozen=True)
class IcosaMesh:
    vertices: tuple[Point3, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, int, int], ...]


def golden_rectangles() -> tuple[GoldenRectangle, GoldenRectangle, GoldenRectangle]:
    """Three perpendicular golden rectangles centered at the origin.

    Short sides have length 2 (unit offsets), long sides 2*phi; the corner
    coordinates are (+-1, +-phi, 0) and cyclic shifts.
    """
    one = Constructible.of(1)
    zero = Constructible.of(0)
    phi = PHI

    def rect(plane: str, short_axis: int, long_axis: int) -> GoldenRectangle:
        corners = []
        for s, l in ((1, 1), (-1, 1), (-1, -1), (1, -1)):
            coords = [zero, zero, zero]
            coords[short_axis] = s * one
            coords[long_axis] = l * phi
            corners.append(Point3(*coords))
        return GoldenRectangle(tuple(corners), plane)

    return (
        rect("xy", 0, 1),  # (+-1, +-phi, 0)
        rect("yz", 1, 2),  # (0, +-1, +-phi)
        rect("zx", 2, 0),  # (+-phi, 0, +-1)
    )


def build_icosahedron() -> IcosaMesh:
    """Mesh over the twelve rectangle corners.

    Edges are all vertex pairs at the minimal pairwise distance (exactly 2)
    and faces are the triangles of mutually adjacent vertices; the counts
    30 and 20 come out of the computation, they are not hard-coded.
    """
    vertices = tuple(
        corner for rectangle in golden_rectangles() for corner in rectangle.corners
    )
    pair_dist = {
        (i, j): dist_sq3(vertices[i], vertices[j])
        for i, j in combinations(range(len(vertices)), 2)
    }
    minimal = None
    for d in pair_dist.values():
        if minimal is None or sign(d - minimal) < 0:
            minimal = d
    edges = tuple(
        pair for pair, d in pair_dist.items() if sign(d - minimal) == 0
    )
    adjacent = set(edges)

    def linked(i: int, j: int) -> bool:
        return (i, j) in adjacent if i < j else (j, i) in adjacent

    faces = []
    for i, j, k in combinations(range(len(vertices)), 3):
        if linked(i, j) and linked(j, k) and linked(i, k):
            # Orient the triangle so its normal points away from the origin.
            u = _sub(vertices[j], vertices[i])
            v = _sub(vertices[k], vertices[i])
            if sign(_det3(u, v, vertices[i])) < 0:
                faces.append((i, k, j))
            else:
                faces.append((i, j, k))
    return IcosaMesh(vertices, edges, tuple(faces))


def _neighbor_pentagon_checks(mesh: IcosaMesh, checks: list[Check]) -> None:
    adjacency: dict[int, list[int]] = {i: [] for i in range(len(mesh.vertices))}
    for i, j in mesh.edges:
        adjacency[i].append(j)
        adjacency[j].append(i)

    degrees_ok = all(len(ns) == 5 for ns in adjacency.values())
    checks.append(Check("every vertex has exactly 5 neighbors", degrees_ok))
    if not degrees_ok:
        return

    phi_sq = PHI * PHI
    for i, ns in adjacency.items():
        v = mesh.vertices[i]
        pts = [mesh.vertices[j] for j in ns]

        base = _sub(pts[1], pts[0])
        span = _sub(pts[2], pts[0])
        coplanar = all(
            sign(_det3(base, span, _sub(p, pts[0]))) == 0 for p in pts[3:]
        )

        # Distance from the axis through the origin and v, squared:
        # |n|^2 - (n . v)^2 / |v|^2, identical for the five neighbors.
        vv = _dot(v, v)
        if sign(vv) == 0:
            checks.append(
                Check(
                    f"neighbors of vertex {i} form a regular golden pentagon",
                    False,
                    "vertex sits at the center, its axis is undefined",
                )
            )
            continue
        axis_d = [_dot(p, p) - _dot(p, v) * _dot(p, v) / vv for p in pts]
        equidistant = all(sign(d - axis_d[0]) == 0 for d in axis_d[1:])

        cx = (pts[0].x + pts[1].x + pts[2].x + pts[3].x + pts[4].x) / 5
        cy = (pts[0].y + pts[1].y + pts[2].y + pts[3].y + pts[4].y) / 5
        cz = (pts[0].z + pts[1].z + pts[2].z + pts[3].z + pts[4].z) / 5
        centroid = Point3(cx, cy, cz)
        to_centroid = [dist_sq3(p, centroid) for p in pts]
        centered = all(sign(d - to_centroid[0]) == 0 for d in to_centroid[1:])

        # The ten pairwise distances split 5/5 into sides and diagonals with
        # diagonal = phi * side: the golden-ratio pentagon relation.
        dists = [dist_sq3(p, q) for p, q in combinations(pts, 2)]
        side = diag = None
        for d in dists:
            if side is None or sign(d - side) < 0:
                side = d
        for d in dists:
            if diag is None or sign(d - diag) > 0:
                diag = d
        sides = sum(1 for d in dists if sign(d - side) == 0)
        diags = sum(1 for d in dists if sign(d - diag) == 0)
        golden = (
            sides == 5 and diags == 5 and sign(diag - phi_sq * side) == 0
        )

        ok = coplanar and equidistant and centered and golden
        checks.append(
            Check(
                f"neighbors of vertex {i} form a regular golden pentagon",
                ok,
                ""
                if ok
                else f"coplanar={coplanar} equidistant={equidistant} "
                f"centered={centered} golden={golden}",
            )
        )


def verify_icosahedron(mesh: IcosaMesh) -> Report:
    """Exact verification: combinatorics, equal edges, equilateral faces and
    the coplanar golden-pentagon neighborhood of every vertex."""
    checks: list[Check] = []

    v, e, f = len(mesh.vertices), len(mesh.edges), len(mesh.faces)
    checks.append(
        Check(
            "counts 12 vertices / 30 edges / 20 faces with Euler characteristic 2",
            v == 12 and e == 30 and f == 20 and v - e + f == 2,
            f"got {v}/{e}/{f}",
        )
    )

    edge_lengths = [dist_sq3(mesh.vertices[i], mesh.vertices[j]) for i, j in mesh.edges]
    if edge_lengths:
        bad = [
            idx
            for idx, d in enumerate(edge_lengths)
            if sign(d - edge_lengths[0]) != 0
        ]
        checks.append(
            Check(
                "all edges exactly the same length",
                not bad,
                f"unequal edges at {bad}" if bad else "",
            )
        )

    bad_faces = []
    for idx, (i, j, k) in enumerate(mesh.faces):
        a = dist_sq3(mesh.vertices[i], mesh.vertices[j])
        b = dist_sq3(mesh.vertices[j], mesh.vertices[k])
        c = dist_sq3(mesh.vertices[i], mesh.vertices[k])
        if sign(a - b) != 0 or sign(a - c) != 0:
            bad_faces.append(idx)
    checks.append(
        Check(
            "all faces exactly equilateral",
            not bad_faces,
            f"non-equilateral faces at {bad_faces}" if bad_faces else "",
        )
    )

    _neighbor_pentagon_checks(mesh, checks)
    return Report(tuple(checks))


def export_mesh(mesh: IcosaMesh, digits: int = 6) -> str:
    """OBJ-style text: 12 `v` lines then 20 `f` lines with 1-based indices.

    Coordinates are correctly rounded decimals, so a re-export is
    byte-identical.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    lines = [
        f"v {approx(p.x, digits)} {approx(p.y, digits)} {approx(p.z, digits)}"
        for p in mesh.vertices
    ]
    lines += [f"f {i + 1} {j + 1} {k + 1}" for i, j, k in mesh.faces]
    return "\n".join(lines) + "\n"

"""straightedge: exact compass-and-straightedge constructions.

Regular polygons with replayable construction traces, radical-exact
trigonometry on the 3-degree dyadic grid, Gauss-Wantzel constructibility
certificates and the golden-rectangle icosahedron -- all on an exact
constructible-number tower with zero floating point in the core.
"""

from .construct import (
    Polygon,
    SUPPORTED_POLYGONS,
    Step,
    Trace,
    construct_polygon,
    double_polygon,
    replay,
    trace_to_dict,
    trace_to_json,
    verify_regular,
)
from .constructibility import (
    KNOWN_FERMAT_PRIMES,
    Refusal,
    Verdict,
    gauss_constructible,
    is_fermat_prime,
    smallest_prime_factor,
)
from .exactnum import Constructible, approx, parse, sign, sqrt
from .geom import (
    Circle,
    Line,
    Point,
    dist_sq,
    intersect_circles,
    intersect_line_circle,
    intersect_lines,
    midpoint,
    perpendicular_bisector,
)
from .icosahedron import (
    GoldenRectangle,
    IcosaMesh,
    PHI,
    Point3,
    build_icosahedron,
    export_mesh,
    golden_rectangles,
    verify_icosahedron,
)
from .reporting import Check, Report
from .svg import RenderConfig, render_svg
from .trig import Angle, max_building_height, point_on_circle, side_length, sin_cos, tan

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "Check",
    "Circle",
    "Constructible",
    "GoldenRectangle",
    "IcosaMesh",
    "KNOWN_FERMAT_PRIMES",
    "Line",
    "PHI",
    "Point",
    "Point3",
    "Polygon",
    "Refusal",
    "RenderConfig",
    "Report",
    "SUPPORTED_POLYGONS",
    "Step",
    "Trace",
    "Verdict",
    "approx",
    "build_icosahedron",
    "construct_polygon",
    "dist_sq",
    "double_polygon",
    "export_mesh",
    "gauss_constructible",
    "golden_rectangles",
    "intersect_circles",
    "intersect_line_circle",
    "intersect_lines",
    "is_fermat_prime",
    "max_building_height",
    "midpoint",
    "parse",
    "perpendicular_bisector",
    "point_on_circle",
    "render_svg",
    "replay",
    "side_length",
    "sign",
    "sin_cos",
    "smallest_prime_factor",
    "sqrt",
    "tan",
    "trace_to_dict",
    "trace_to_json",
    "verify_icosahedron",
    "verify_regular",
]

"""Exact sines, cosines and tangents on the 3-degree dyadic grid.

Supported angles are ``3*m / 2**k`` degrees in (0, 90]: everything a
straightedge and compass can reach starting from the 18/30/45 degree seed
values.  Integer multiples of 3 degrees are generated by the addition and
subtraction formulas (15 = 45 - 30, then 3 = 18 - 15, then stepping by 3);
dyadic subdivisions come from the half-angle formulas, always on the
positive branch since every grid angle is acute.  Results are memoized, so
each angle is derived once via a fixed route.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Constructible, ONE, ZERO, sign, sqrt

__all__ = [
    "Angle",
    "sin_cos",
    "tan",
    "side_length",
    "max_building_height",
    "point_on_circle",
]


def _on_grid(degrees: Fraction) -> bool:
    step = degrees / 3
    return step > 0 and step.denominator & (step.denominator - 1) == 0


@dataclass(frozen=True)
class Angle:
    """An angle in degrees of the form 3*m / 2**k, restricted to (0, 90]."""

    degrees: Fraction

    def __post_init__(self):
        d = self.degrees
        if not isinstance(d, Fraction):
            raise TypeError("degrees must be a Fraction")
        if not (0 < d <= 90):
            raise ValueError(f"{d} degrees is outside (0, 90]")
        if not _on_grid(d):
            raise ValueError(
                f"{d} degrees is off the constructible grid 3*m/2^k"
            )

    @classmethod
    def of(cls, value) -> "Angle":
        if isinstance(value, Angle):
            return value
        if isinstance(value, (int, str)):
            return cls(Fraction(value))
        if isinstance(value, Fraction):
            return cls(value)
        raise TypeError(f"cannot read an angle from {type(value).__name__}")

    def __str__(self) -> str:
        return f"{self.degrees}°"


_memo: dict[Fraction, tuple[Constructible, Constructible]] = {}
_memo_lock = threading.RLock()


def _seed_values() -> dict[Fraction, tuple[Constructible, Constructible]]:
    half = Constructible.of(Fraction(1, 2))
    s5 = sqrt(5)
    return {
        Fraction(18): ((s5 - 1) / 4, sqrt(10 + 2 * s5) / 4),
        Fraction(30): (half, sqrt(3) / 2),
        Fraction(45): (sqrt(2) / 2, sqrt(2) / 2),
    }


def _sum_formula(x, y, subtract=False):
    sx, cx = x
    sy, cy = y
    if subtract:
        return sx * cy - cx * sy, cx * cy + sx * sy
    return sx * cy + cx * sy, cx * cy - sx * sy


def _sin_cos_raw(deg: Fraction) -> tuple[Constructible, Constructible]:
    with _memo_lock:
        if not _memo:
            _memo.update(_seed_values())
        cached = _memo.get(deg)
        if cached is not None:
            return cached
        if deg.denominator == 1:
            if deg == 15:
                value = _sum_formula(_sin_cos_raw(Fraction(45)), _sin_cos_raw(Fraction(30)), subtract=True)
            elif deg == 3:
                value = _sum_formula(_sin_cos_raw(Fraction(18)), _sin_cos_raw(Fraction(15)), subtract=True)
            else:
                value = _sum_formula(_sin_cos_raw(deg - 3), _sin_cos_raw(Fraction(3)))
        else:
            double = 2 * deg
            if double <= 90:
                _, c2 = _sin_cos_raw(double)
            else:
                _, c2 = _sin_cos_raw(180 - double)
                c2 = -c2
            value = (sqrt((1 - c2) / 2), sqrt((1 + c2) / 2))
        _memo[deg] = value
        return value


def sin_cos(angle) -> tuple[Constructible, Constructible]:
    """Exact (sin, cos) for a grid angle; sin^2 + cos^2 = 1 holds exactly."""
    return _sin_cos_raw(Angle.of(angle).degrees)


def tan(angle) -> Constructible:
    """Exact tangent; undefined (and rejected) at 90 degrees."""
    a = Angle.of(angle)
    if a.degrees == 90:
        raise ValueError("tangent is undefined at 90 degrees")
    s, c = sin_cos(a)
    return s / c


def side_length(n: int) -> Constructible:
    """Side of the regular n-gon inscribed in the unit circle: 2*sin(180/n)."""
    if not isinstance(n, int) or n < 3:
        raise ValueError("n must be an integer >= 3")
    deg = Fraction(180, n)
    if not _on_grid(deg):
        raise ValueError(
            f"180/{n} = {deg} degrees is off the constructible grid 3*m/2^k"
        )
    s, _ = sin_cos(Angle(deg))
    return 2 * s


def max_building_height(distance, angle) -> Constructible:
    """Height subtending ``angle`` at horizontal ``distance``: distance * tan."""
    d = Constructible.of(distance)
    if sign(d) <= 0:
        raise ValueError("distance must be positive")
    return d * tan(angle)


def point_on_circle(degrees: Fraction) -> tuple[Constructible, Constructible]:
    """Exact (cos, sin) of any grid multiple in [0, 360), for vertex checks."""
    deg = Fraction(degrees) % 360
    if deg == 0:
        return ONE, ZERO
    if deg == 90:
        return ZERO, ONE
    if deg == 180:
        return -ONE, ZERO
    if deg == 270:
        return ZERO, -ONE
    if deg < 90:
        s, c = sin_cos(Angle(deg))
        return c, s
    if deg < 180:
        s, c = sin_cos(Angle(180 - deg))
        return -c, s
    if deg < 270:
        s, c = sin_cos(Angle(deg - 180))
        return -c, -s
    s, c = sin_cos(Angle(360 - deg))
    return c, -s

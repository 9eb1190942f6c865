"""Geometric primitives: balls, axis-aligned boxes, and box regions.

All predicates use closed-set semantics with an absolute tolerance TOL on
boundary coincidences; exact touches are resolved conservatively (tangent
shapes intersect, objects coinciding with a region face are Boundary).
Everything here is immutable and pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

TOL = 1e-9

# Collections stay fat only while box aspect ratios are bounded.
MAX_BOX_ASPECT = 2.0

Point = Tuple[float, ...]


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Ball:
    center: Point
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not all(math.isfinite(c) for c in self.center):
            raise ValueError("ball center must be finite")
        if not (self.radius > 0):
            raise ValueError("ball radius must be positive")

    @property
    def dim(self) -> int:
        return len(self.center)


@dataclass(frozen=True)
class AxisBox:
    low: Point
    high: Point

    def __post_init__(self):
        object.__setattr__(self, "low", tuple(float(c) for c in self.low))
        object.__setattr__(self, "high", tuple(float(c) for c in self.high))
        if len(self.low) != len(self.high):
            raise DimensionMismatchError("low/high dimension mismatch")
        sides = [h - l for l, h in zip(self.low, self.high)]
        if not all(math.isfinite(s) and s > 0 for s in sides):
            raise ValueError("box must have positive finite extent on every axis")
        if max(sides) > MAX_BOX_ASPECT * min(sides) + TOL:
            raise ValueError(
                "box aspect ratio %.3f exceeds %.1f; collection would not be fat"
                % (max(sides) / min(sides), MAX_BOX_ASPECT)
            )

    @property
    def dim(self) -> int:
        return len(self.low)


FatObject = Union[Ball, AxisBox]


@dataclass(frozen=True)
class BoxRegion:
    """An axis-aligned box used as a candidate separator region."""

    low: Point
    high: Point

    def __post_init__(self):
        object.__setattr__(self, "low", tuple(float(c) for c in self.low))
        object.__setattr__(self, "high", tuple(float(c) for c in self.high))
        if len(self.low) != len(self.high):
            raise DimensionMismatchError("low/high dimension mismatch")
        if not all(h > l for l, h in zip(self.low, self.high)):
            raise ValueError("region must have positive extent on every axis")

    @property
    def dim(self) -> int:
        return len(self.low)

    @property
    def sides(self) -> Tuple[float, ...]:
        return tuple(h - l for l, h in zip(self.low, self.high))

    @property
    def longest_side(self) -> float:
        return max(self.sides)

    @property
    def shortest_side(self) -> float:
        return min(self.sides)

    @property
    def aspect_ratio(self) -> float:
        return self.longest_side / self.shortest_side

    @property
    def center(self) -> Point:
        return tuple((l + h) / 2.0 for l, h in zip(self.low, self.high))

    @property
    def volume(self) -> float:
        return math.prod(self.sides)


class RegionClass(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


def size(obj: FatObject) -> float:
    """Side of the smallest enclosing axis-aligned cube."""
    if isinstance(obj, Ball):
        return 2.0 * obj.radius
    return max(h - l for l, h in zip(obj.low, obj.high))


def center(obj: FatObject) -> Point:
    if isinstance(obj, Ball):
        return obj.center
    return tuple((l + h) / 2.0 for l, h in zip(obj.low, obj.high))


def bounding_low_high(obj: FatObject) -> Tuple[Point, Point]:
    if isinstance(obj, Ball):
        return (
            tuple(c - obj.radius for c in obj.center),
            tuple(c + obj.radius for c in obj.center),
        )
    return obj.low, obj.high


def _check_same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")


def _dist2_point_box(p: Point, low: Point, high: Point) -> float:
    s = 0.0
    for x, l, h in zip(p, low, high):
        if x < l:
            s += (l - x) ** 2
        elif x > h:
            s += (x - h) ** 2
    return s


def contains_point(obj: FatObject, p: Point) -> bool:
    """Closed-set membership of a point in an object (tolerance TOL)."""
    if isinstance(obj, Ball):
        d2 = sum((x - c) ** 2 for x, c in zip(p, obj.center))
        return d2 <= (obj.radius + TOL) ** 2
    return all(l - TOL <= x <= h + TOL for x, l, h in zip(p, obj.low, obj.high))


def intersects(a: FatObject, b: FatObject) -> bool:
    """True iff the closed shapes share at least one point."""
    _check_same_dim(a, b)
    if isinstance(a, Ball) and isinstance(b, Ball):
        d2 = sum((x - y) ** 2 for x, y in zip(a.center, b.center))
        return d2 <= (a.radius + b.radius + TOL) ** 2
    if isinstance(a, Ball):
        return _dist2_point_box(a.center, b.low, b.high) <= (a.radius + TOL) ** 2
    if isinstance(b, Ball):
        return _dist2_point_box(b.center, a.low, a.high) <= (b.radius + TOL) ** 2
    return all(
        al <= bh + TOL and bl <= ah + TOL
        for al, ah, bl, bh in zip(a.low, a.high, b.low, b.high)
    )


def classify(obj: FatObject, box: BoxRegion) -> RegionClass:
    """Inside (strictly interior), Outside (disjoint), or Boundary.

    Coincidences within TOL of a face count as Boundary.
    """
    _check_same_dim(obj, box)
    olow, ohigh = bounding_low_high(obj)
    if isinstance(obj, Ball):
        d2 = _dist2_point_box(obj.center, box.low, box.high)
        if d2 > (obj.radius + TOL) ** 2:
            return RegionClass.OUTSIDE
    else:
        for ol, oh, l, h in zip(olow, ohigh, box.low, box.high):
            if oh < l - TOL or ol > h + TOL:
                return RegionClass.OUTSIDE
    inside = all(
        ol >= l + TOL and oh <= h - TOL
        for ol, oh, l, h in zip(olow, ohigh, box.low, box.high)
    )
    return RegionClass.INSIDE if inside else RegionClass.BOUNDARY


def center_in(obj: FatObject, box: BoxRegion) -> bool:
    """True iff the object's center lies in the closed box."""
    _check_same_dim(obj, box)
    c = center(obj)
    return all(l - TOL <= x <= h + TOL for x, l, h in zip(c, box.low, box.high))


def magnify(box: BoxRegion, m: float) -> BoxRegion:
    """Scale every side by m about the box center."""
    if m < 1.0 - TOL:
        raise ValueError(f"magnification factor must be >= 1, got {m}")
    c = box.center
    half = [m * s / 2.0 for s in box.sides]
    return BoxRegion(
        tuple(x - h for x, h in zip(c, half)),
        tuple(x + h for x, h in zip(c, half)),
    )


def split_longest(box: BoxRegion) -> Tuple[BoxRegion, BoxRegion]:
    """Cut the box in the middle of its longest side (lowest axis on ties)."""
    sides = box.sides
    axis = max(range(box.dim), key=lambda i: (sides[i], -i))
    mid = (box.low[axis] + box.high[axis]) / 2.0
    hi1 = list(box.high)
    hi1[axis] = mid
    lo2 = list(box.low)
    lo2[axis] = mid
    return BoxRegion(box.low, tuple(hi1)), BoxRegion(tuple(lo2), box.high)


def bounding_region(objs) -> BoxRegion:
    """Smallest BoxRegion containing every object (degenerate axes padded)."""
    if not objs:
        raise ValueError("no objects")
    d = objs[0].dim
    lo = [math.inf] * d
    hi = [-math.inf] * d
    for o in objs:
        olow, ohigh = bounding_low_high(o)
        for i in range(d):
            lo[i] = min(lo[i], olow[i])
            hi[i] = max(hi[i], ohigh[i])
    for i in range(d):
        if hi[i] - lo[i] <= 0:
            lo[i] -= 0.5
            hi[i] += 0.5
    return BoxRegion(tuple(lo), tuple(hi))

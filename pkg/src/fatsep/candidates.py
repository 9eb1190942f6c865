"""Finite candidate point sets for piercing.

The candidate set is sound: some optimal piercing of the given objects uses
only returned points.  Boxes (any dimension): the grid of all per-axis low
coordinates plus object centers — any pierce point can be pushed to the
componentwise maximum of the lows of the boxes it pierces.  Disks (d=2):
the lowest point of each disk plus all pairwise circle intersection points —
the lowest point of any nonempty disk intersection is one of these.
"""
from __future__ import annotations

import itertools
import math
from typing import List, Sequence

from .geometry import AxisBox, Ball, FatObject, Point, TOL, contains_point


class UnsupportedShapeError(ValueError):
    pass


def _circle_intersections(a: Ball, b: Ball) -> List[Point]:
    (ax, ay), (bx, by) = a.center, b.center
    dx, dy = bx - ax, by - ay
    d = math.hypot(dx, dy)
    if d < TOL:
        return []
    if d > a.radius + b.radius + TOL or d < abs(a.radius - b.radius) - TOL:
        return []
    # Standard two-circle intersection; clamp guards grazing contact.
    t = (a.radius**2 - b.radius**2 + d * d) / (2 * d)
    h2 = max(a.radius**2 - t * t, 0.0)
    h = math.sqrt(h2)
    mx, my = ax + t * dx / d, ay + t * dy / d
    ox, oy = -dy / d * h, dx / d * h
    if h <= TOL:
        return [(mx, my)]
    return [(mx + ox, my + oy), (mx - ox, my - oy)]


def candidate_pierce_points(objs: Sequence[FatObject]) -> List[Point]:
    """Sound finite candidate set for piercing `objs` (sorted, deduplicated)."""
    if not objs:
        return []
    kinds = {type(o) for o in objs}
    d = objs[0].dim
    pts: set = set()
    if kinds == {AxisBox}:
        axis_lows = [sorted({o.low[i] for o in objs}) for i in range(d)]
        for combo in itertools.product(*axis_lows):
            pts.add(combo)
        for o in objs:
            pts.add(tuple((l + h) / 2.0 for l, h in zip(o.low, o.high)))
    elif kinds == {Ball}:
        if d != 2:
            raise UnsupportedShapeError(
                "piercing candidates for balls are only available in d=2"
            )
        for o in objs:
            pts.add((o.center[0], o.center[1] - o.radius))
        for i, a in enumerate(objs):
            for b in objs[i + 1 :]:
                for p in _circle_intersections(a, b):
                    pts.add(p)
    else:
        raise UnsupportedShapeError(
            "piercing candidates require a pure ball or pure box family"
        )
    return sorted(pts)


def coverage_masks(objs: Sequence[FatObject], points: Sequence[Point]) -> List[int]:
    """Bitmask per point of the objects it pierces (bit i = objs[i])."""
    masks = []
    for p in points:
        m = 0
        for i, o in enumerate(objs):
            if contains_point(o, p):
                m |= 1 << i
        masks.append(m)
    return masks

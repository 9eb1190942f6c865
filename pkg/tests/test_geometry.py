import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatsep.geometry import (
    AxisBox,
    Ball,
    BoxRegion,
    DimensionMismatchError,
    RegionClass,
    center_in,
    classify,
    contains_point,
    intersects,
    magnify,
    size,
    split_longest,
)
from conftest import random_objects

coord = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)


def boxes(d=2):
    return st.lists(coord, min_size=d, max_size=d).flatmap(
        lambda lo: st.lists(
            st.floats(min_value=0.1, max_value=20), min_size=d, max_size=d
        ).map(lambda s: BoxRegion(tuple(lo), tuple(l + x for l, x in zip(lo, s))))
    )


def test_size_examples():
    assert size(Ball((0, 0), 1)) == 2.0
    assert size(AxisBox((0, 0), (2, 1))) == 2.0
    assert size(AxisBox((0, 0, 0), (1, 1, 1))) == 1.0


def test_size_scales_linearly():
    b = Ball((1.0, 2.0), 0.75)
    scaled = Ball((3.0, 6.0), 0.75 * 3)
    assert size(scaled) == pytest.approx(3 * size(b))


def test_box_aspect_guard():
    with pytest.raises(ValueError):
        AxisBox((0, 0), (10, 1))


def test_intersects_examples():
    assert not intersects(Ball((0, 0), 1), Ball((3, 0), 1))
    assert intersects(Ball((0, 0), 1), Ball((2, 0), 1))  # tangent, closed sets
    assert intersects(AxisBox((0, 0), (1, 1)), Ball((2, 1), 1.05))
    assert not intersects(AxisBox((0, 0), (1, 1)), Ball((2, 1), 0.95))


def test_intersects_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        intersects(Ball((0, 0), 1), Ball((0, 0, 0), 1))


def test_classify_examples():
    box = BoxRegion((-2, -2), (2, 2))
    assert classify(Ball((0, 0), 1), box) is RegionClass.INSIDE
    assert classify(Ball((5, 5), 1), box) is RegionClass.OUTSIDE
    assert classify(Ball((2, 0), 1), box) is RegionClass.BOUNDARY


def test_center_in_examples():
    box = BoxRegion((-1, -1), (1, 1))
    assert center_in(Ball((0, 0), 10), box)
    assert not center_in(Ball((2, 0), 0.1), box)
    assert center_in(AxisBox((0, 0), (4, 4)), BoxRegion((1, 1), (3, 3)))


def test_magnify_examples():
    b = BoxRegion((0, 0), (2, 2))
    assert magnify(b, 1) == b
    assert magnify(b, 2) == BoxRegion((-1, -1), (3, 3))
    m = magnify(BoxRegion((0, 0), (2, 4)), 1.5)
    assert m.low == pytest.approx((-0.5, -1.0))
    assert m.high == pytest.approx((2.5, 5.0))
    with pytest.raises(ValueError):
        magnify(b, 0.5)


def test_split_longest_examples():
    a, b = split_longest(BoxRegion((0, 0), (4, 2)))
    assert (a.high[0], b.low[0]) == (2, 2)
    a, b = split_longest(BoxRegion((0, 0), (2, 2)))
    assert a.high[0] == 1  # tie broken on the lowest axis
    a, b = split_longest(BoxRegion((0, 0, 0), (2, 2, 4)))
    assert a.high[2] == 2 and b.low[2] == 2


@given(boxes())
def test_split_halves_volume(box):
    a, b = split_longest(box)
    assert a.volume + b.volume == pytest.approx(box.volume)
    assert a.volume == pytest.approx(b.volume)
    for i in range(box.dim):
        assert min(a.low[i], b.low[i]) == box.low[i]
        assert max(a.high[i], b.high[i]) == box.high[i]


@given(boxes(), st.floats(min_value=1, max_value=1.5), st.floats(min_value=0, max_value=0.5))
def test_magnify_nesting(box, m1, extra):
    m2 = m1 + extra
    inner = magnify(box, m1)
    outer = magnify(box, m2)
    for i in range(box.dim):
        assert outer.low[i] <= inner.low[i] + 1e-9
        assert outer.high[i] >= inner.high[i] - 1e-9
    assert outer.aspect_ratio == pytest.approx(box.aspect_ratio)


def test_classify_partition_random():
    rng = random.Random(5)
    objs = random_objects(5, 60, d=2, shape="ball") + random_objects(6, 60, d=2, shape="box")
    for _ in range(200):
        lo = (rng.uniform(-5, 10), rng.uniform(-5, 10))
        s = rng.uniform(0.5, 12)
        box = BoxRegion(lo, (lo[0] + s, lo[1] + s))
        for o in objs:
            cls = classify(o, box)
            if cls is RegionClass.INSIDE:
                assert center_in(o, box)
            elif cls is RegionClass.OUTSIDE:
                assert not center_in(o, box)


def test_intersects_symmetric_random():
    objs = random_objects(7, 40, shape="ball") + random_objects(8, 40, shape="box")
    rng = random.Random(9)
    for _ in range(500):
        a, b = rng.choice(objs), rng.choice(objs)
        assert intersects(a, b) == intersects(b, a)
        assert intersects(a, a)


def _margin(a, b):
    """Signed penetration depth; positive means overlap."""
    if isinstance(a, Ball) and isinstance(b, Ball):
        d = math.dist(a.center, b.center)
        return a.radius + b.radius - d
    if isinstance(a, Ball) or isinstance(b, Ball):
        ball, box = (a, b) if isinstance(a, Ball) else (b, a)
        d2 = sum(
            max(l - x, 0.0, x - h) ** 2
            for x, l, h in zip(ball.center, box.low, box.high)
        )
        return ball.radius - math.sqrt(d2)
    return min(
        min(ah, bh) - max(al, bl)
        for al, ah, bl, bh in zip(a.low, a.high, b.low, b.high)
    )


def test_intersects_agrees_with_point_sampling():
    """Monte-Carlo membership oracle: 1e5 samples per pair, 1000 pairs."""
    rng = np.random.default_rng(123)
    pyrng = random.Random(11)
    objs = random_objects(11, 80, shape="ball") + random_objects(12, 80, shape="box")
    checked = 0
    for _ in range(1000):
        a, b = pyrng.choice(objs), pyrng.choice(objs)
        lo_a, hi_a = _bbox(a)
        lo_b, hi_b = _bbox(b)
        lo = np.minimum(lo_a, lo_b)
        hi = np.maximum(hi_a, hi_b)
        area = float(np.prod(hi - lo))
        spacing = math.sqrt(area / 1e5)
        m = _margin(a, b)
        if abs(m) < 6 * spacing:
            continue  # analytic margin below sampling resolution
        pts = rng.uniform(lo, hi, size=(100_000, 2))
        common = np.any(_member(a, pts) & _member(b, pts))
        assert bool(common) == intersects(a, b)
        checked += 1
    assert checked > 500


def _bbox(o):
    if isinstance(o, Ball):
        c = np.array(o.center)
        return c - o.radius, c + o.radius
    return np.array(o.low), np.array(o.high)


def _member(o, pts):
    if isinstance(o, Ball):
        c = np.array(o.center)
        return ((pts - c) ** 2).sum(axis=1) <= o.radius**2
    return np.all((pts >= np.array(o.low)) & (pts <= np.array(o.high)), axis=1)

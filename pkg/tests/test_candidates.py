import pytest

from fatsep.candidates import (
    UnsupportedShapeError,
    candidate_pierce_points,
    coverage_masks,
)
from fatsep.geometry import AxisBox, Ball, contains_point


def test_single_disk_lowest_point():
    d = Ball((3.0, 4.0), 2.0)
    pts = candidate_pierce_points([d])
    assert (3.0, 2.0) in pts
    assert any(contains_point(d, p) for p in pts)


def test_two_boxes_overlap_corner():
    a = AxisBox((0, 0), (2, 2))
    b = AxisBox((1, 1), (3, 3))
    pts = candidate_pierce_points([a, b])
    # grid of per-axis lows contains the overlap corner (max-low per axis)
    assert (1.0, 1.0) in pts
    assert any(contains_point(a, p) and contains_point(b, p) for p in pts)


def test_two_disks_intersection_points():
    a = Ball((0, 0), 1.5)
    b = Ball((2, 0), 1.5)
    pts = candidate_pierce_points([a, b])
    both = [p for p in pts if contains_point(a, p) and contains_point(b, p)]
    assert both  # the lens region is represented


def test_candidates_sorted_unique():
    objs = [Ball((i, 0), 1.0) for i in range(4)]
    pts = candidate_pierce_points(objs)
    assert pts == sorted(set(pts))


def test_balls_d3_unsupported():
    with pytest.raises(UnsupportedShapeError):
        candidate_pierce_points([Ball((0, 0, 0), 1.0), Ball((1, 0, 0), 1.0)])


def test_mixed_family_unsupported():
    with pytest.raises(UnsupportedShapeError):
        candidate_pierce_points([Ball((0, 0), 1.0), AxisBox((0, 0), (1, 1))])


def test_coverage_masks():
    a = AxisBox((0, 0), (1, 1))
    b = AxisBox((10, 10), (11, 11))
    pts = [(0.5, 0.5), (10.5, 10.5), (5.0, 5.0)]
    assert coverage_masks([a, b], pts) == [1, 2, 0]

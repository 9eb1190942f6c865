"""Packing/piercing measure estimates.

Polynomial-time greedy bounds (smallest-first, id tie-break, fully
deterministic) and exact evaluation that gives up past a cap.  The greedy
packing value is always a lower bound on the true packing number; the greedy
piercing value is always a feasible upper bound on the piercing number.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import candidates as cand
from .geometry import FatObject, Point, intersects, size


class _Overflow:
    """Sentinel: the exact value exceeds the requested cap."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OVERFLOW"


OVERFLOW = _Overflow()

APPROX_LOWER = "approx_lower"
EXACT = "exact"


@dataclass
class MeasureEstimate:
    value: int
    kind: str
    witness: list = field(default_factory=list)


class IntersectionContext:
    """Precomputed sizes, ordering, and closed-neighborhood bitmasks."""

    def __init__(self, objs: Sequence[FatObject]):
        self.objs = list(objs)
        n = len(self.objs)
        self.sizes = [size(o) for o in self.objs]
        self.order = sorted(range(n), key=lambda i: (self.sizes[i], i))
        self.nbr = [1 << i for i in range(n)]
        for i in range(n):
            oi = self.objs[i]
            for j in range(i + 1, n):
                if intersects(oi, self.objs[j]):
                    self.nbr[i] |= 1 << j
                    self.nbr[j] |= 1 << i

    @property
    def n(self) -> int:
        return len(self.objs)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def greedy_pack_mask(self, mask: int, stop_at: Optional[int] = None):
        """Smallest-first maximal independent set within `mask`.

        Returns (value, chosen_mask).  With `stop_at`, stops early once that
        many objects are chosen (value is then only a lower bound).
        """
        chosen = 0
        value = 0
        for i in self.order:
            bit = 1 << i
            if mask & bit and not (self.nbr[i] & chosen):
                chosen |= bit
                value += 1
                if stop_at is not None and value >= stop_at:
                    break
        return value, chosen


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_ids(mask: int) -> List[int]:
    return list(_bits(mask))


def greedy_pack(
    objs: Sequence[FatObject], ctx: Optional[IntersectionContext] = None
) -> MeasureEstimate:
    """Maximal independent set, smallest object first; a lower bound on Pack."""
    if ctx is None:
        ctx = IntersectionContext(objs)
    value, chosen = ctx.greedy_pack_mask(ctx.full_mask())
    return MeasureEstimate(value=value, kind=APPROX_LOWER, witness=mask_to_ids(chosen))


def greedy_pierce(objs: Sequence[FatObject]) -> MeasureEstimate:
    """Feasible piercing point set, a constant-factor upper bound on Pierce.

    Rounds: take the smallest unpierced object, then cover its whole
    unpierced neighborhood with greedily chosen candidate points.
    """
    n = len(objs)
    if n == 0:
        return MeasureEstimate(value=0, kind=APPROX_LOWER, witness=[])
    ctx = IntersectionContext(objs)
    points = cand.candidate_pierce_points(objs)
    cov = cand.coverage_masks(objs, points)
    unpierced = ctx.full_mask()
    picked: List[Point] = []
    while unpierced:
        o = next(i for i in ctx.order if unpierced & (1 << i))
        todo = ctx.nbr[o] & unpierced
        while todo:
            best = None
            for k, p in enumerate(points):
                gain = (cov[k] & todo).bit_count()
                if gain and (best is None or gain > best[0]):
                    best = (gain, k)
            assert best is not None, "candidate set must cover every object"
            k = best[1]
            picked.append(points[k])
            unpierced &= ~cov[k]
            todo &= ~cov[k]
    return MeasureEstimate(value=len(picked), kind=APPROX_LOWER, witness=picked)


class _CapHit(Exception):
    pass


def exact_small_pack(
    objs: Sequence[FatObject],
    cap: int,
    ctx: Optional[IntersectionContext] = None,
):
    """Exact Pack if it is <= cap, else OVERFLOW.

    Branches on the closed neighborhood of the smallest remaining object:
    every maximal independent set contains one of those objects, so depth
    equals the solution size and is bounded by cap.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if ctx is None:
        ctx = IntersectionContext(objs)

    best_val = -1
    best_wit = 0

    def rec(mask: int, depth: int, picked: int):
        nonlocal best_val, best_wit
        if not mask:
            if depth > best_val:
                best_val, best_wit = depth, picked
            return
        if depth + mask.bit_count() <= best_val:
            return
        if depth == cap:
            raise _CapHit
        v = next(i for i in ctx.order if mask & (1 << i))
        branch = ctx.nbr[v] & mask
        for u in _bits(branch):
            rec(mask & ~ctx.nbr[u], depth + 1, picked | (1 << u))

    try:
        rec(ctx.full_mask(), 0, 0)
    except _CapHit:
        return OVERFLOW
    return MeasureEstimate(value=best_val, kind=EXACT, witness=mask_to_ids(best_wit))


def exact_small_pierce(objs: Sequence[FatObject], cap: int):
    """Exact Pierce if it is <= cap, else OVERFLOW.

    Set-cover branch over candidate points inside the smallest uncovered
    object; strictly dominated candidates are dropped up front.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    n = len(objs)
    if n == 0:
        return MeasureEstimate(value=0, kind=EXACT, witness=[])
    ctx = IntersectionContext(objs)
    points = cand.candidate_pierce_points(objs)
    cov = cand.coverage_masks(objs, points)
    points, cov = prune_dominated(points, cov)

    best_val = cap + 1
    best_pts: List[Point] = []

    def rec(uncovered: int, count: int, picked: List[Point]):
        nonlocal best_val, best_pts
        if not uncovered:
            if count < best_val:
                best_val, best_pts = count, list(picked)
            return
        if count + 1 >= best_val:
            return
        o = next(i for i in ctx.order if uncovered & (1 << i))
        obit = 1 << o
        for k in range(len(points)):
            if cov[k] & obit:
                picked.append(points[k])
                rec(uncovered & ~cov[k], count + 1, picked)
                picked.pop()

    rec(ctx.full_mask(), 0, [])
    if best_val > cap:
        return OVERFLOW
    return MeasureEstimate(value=best_val, kind=EXACT, witness=best_pts)


def prune_dominated(points: Sequence[Point], cov: Sequence[int]):
    """Drop candidate points whose coverage is contained in another's.

    On equal coverage the lexicographically smallest point is kept, so the
    result is deterministic.
    """
    keep_points: List[Point] = []
    keep_cov: List[int] = []
    order = sorted(range(len(points)), key=lambda k: points[k])
    for k in order:
        c = cov[k]
        if not c:
            continue
        if any(c & ~kc == 0 for kc in keep_cov):
            continue
        # Remove earlier entries now dominated by c (strictly smaller coverage).
        keep = [(p, kc) for p, kc in zip(keep_points, keep_cov) if kc & ~c or kc == c]
        keep_points = [p for p, _ in keep] + [points[k]]
        keep_cov = [kc for _, kc in keep] + [c]
    pair = sorted(zip(keep_points, keep_cov))
    return [p for p, _ in pair], [c for _, c in pair]

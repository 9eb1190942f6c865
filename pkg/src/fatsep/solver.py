"""Exact packing and piercing by recursive separation.

Small subproblems (by greedy estimate) are closed exactly; larger ones are
split with a box separator, enumerating independent sets (packing) or
candidate pierce covers (piercing) of the boundary class.  Unbalanced or
degenerate separators fall back to pivot branching, so termination and
exactness never depend on separator quality.
"""
from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import candidates as cand
from .geometry import FatObject, Point, size
from .instances import Instance
from .measure import (
    OVERFLOW,
    IntersectionContext,
    exact_small_pack,
    exact_small_pierce,
    greedy_pack,
    greedy_pierce,
    mask_to_ids,
    prune_dominated,
)
from .separator import SeparatorConfig, SeparatorResult, separate


@dataclass
class SolveConfig:
    base_threshold: int = 12
    epsilon: float = 0.25
    node_cap: int = 10**8
    parallel_branches: bool = False
    balance_cap: float = 0.8

    def __post_init__(self):
        if self.base_threshold < 1:
            raise ValueError("base_threshold must be >= 1")
        if self.node_cap < 1:
            raise ValueError("node_cap must be >= 1")

    def separator_config(self) -> SeparatorConfig:
        return SeparatorConfig(epsilon=self.epsilon, balance_cap=self.balance_cap)


@dataclass
class PackSolution:
    value: int
    witness: List[int]
    nodes: int
    depth: int
    wall_time: float
    optimal: bool = True


@dataclass
class PierceSolution:
    value: int
    witness: List[Point]
    nodes: int
    depth: int
    wall_time: float
    optimal: bool = True


class NodeCapExceeded(Exception):
    def __init__(self, best_value: int, best_witness: list):
        super().__init__(f"node cap exceeded; best-so-far value {best_value}")
        self.best_value = best_value
        self.best_witness = best_witness


class _Budget:
    def __init__(self, cap: int):
        self.cap = cap
        self.count = 0
        self._lock = threading.Lock()

    def tick(self):
        with self._lock:
            self.count += 1
            if self.count > self.cap:
                raise _CapStop


class _CapStop(Exception):
    pass


def enumerate_boundary_independent_sets(
    boundary: Sequence[FatObject], cap: int
):
    """Yield every independent subset of `boundary` of size <= cap, once.

    DFS with forward pruning: subsets extend only by non-intersecting,
    higher-id objects, so each subset appears exactly once, the empty set
    first.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    ctx = IntersectionContext(boundary)
    yield from _enum_indep_masks(ctx, ctx.full_mask(), cap, as_lists=True)


def _enum_indep_masks(ctx: IntersectionContext, mask: int, cap: int, as_lists=False):
    n_bits = mask.bit_length()

    def rec(prefix: List[int], prefix_mask: int, cand_mask: int):
        yield (list(prefix) if as_lists else prefix_mask)
        if len(prefix) == cap:
            return
        rest = cand_mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            higher = ~((1 << (i + 1)) - 1)
            yield from rec(
                prefix + [i], prefix_mask | low, cand_mask & higher & ~ctx.nbr[i]
            )

    yield from rec([], 0, mask)


def neighborhood(inst: Instance, ids: Sequence[int]) -> List[int]:
    """Closed neighborhood: `ids` plus every object intersecting one of them."""
    ctx = IntersectionContext(inst.objects)
    mask = 0
    for i in ids:
        mask |= ctx.nbr[i]
    return mask_to_ids(mask)


def candidate_pierce_points(objs: Sequence[FatObject]) -> List[Point]:
    """Sound finite pierce candidate set (see candidates module)."""
    return cand.candidate_pierce_points(objs)


class _PackSearch:
    def __init__(self, ctx: IntersectionContext, cfg: SolveConfig, budget: _Budget):
        self.ctx = ctx
        self.cfg = cfg
        self.budget = budget
        self.sepcfg = cfg.separator_config()
        # Thread fan-out happens once, at the outermost separated node;
        # nested parallelism would multiply threads without bound.
        self._parallel_remaining = 1 if cfg.parallel_branches else 0

    def solve(self, mask: int) -> Tuple[int, List[int], int, int]:
        """Returns (value, witness ids, nodes, depth)."""
        self.budget.tick()
        if not mask:
            return 0, [], 1, 0
        ids = mask_to_ids(mask)
        g, _ = self.ctx.greedy_pack_mask(mask)
        if g <= self.cfg.base_threshold:
            return self._base_case(mask, ids, g)
        sub = [self.ctx.objs[i] for i in ids]
        sep = separate(sub, self.sepcfg)
        total = sep.mu_total.value
        unbalanced = (
            sep.degenerate
            or len(sep.boundary_ids) == len(ids)
            or max(sep.mu_inside.value, sep.mu_outside.value)
            > self.cfg.balance_cap * total
        )
        if unbalanced:
            return self._pivot(mask, ids)
        return self._separated(mask, ids, sep)

    def _base_case(self, mask, ids, g):
        sub = [self.ctx.objs[i] for i in ids]
        cap = max(g, 1)
        while True:
            res = exact_small_pack(sub, cap)
            if res is not OVERFLOW:
                break
            cap = min(len(ids), cap * 2)
        return res.value, sorted(ids[j] for j in res.witness), 1, 0

    def _pivot(self, mask, ids):
        # Max-degree pivot: Pack = max(Pack(C - o), 1 + Pack(C - N[o])).
        o = max(ids, key=lambda i: ((self.ctx.nbr[i] & mask).bit_count(), -i))
        skip = self.solve(mask & ~(1 << o))
        take = self.solve(mask & ~self.ctx.nbr[o])
        nodes = 1 + skip[2] + take[2]
        depth = 1 + max(skip[3], take[3])
        if 1 + take[0] >= skip[0]:
            return 1 + take[0], sorted(take[1] + [o]), nodes, depth
        return skip[0], skip[1], nodes, depth

    def _separated(self, mask, ids, sep: SeparatorResult):
        to_global = ids
        inside = 0
        for j in sep.inside_ids:
            inside |= 1 << to_global[j]
        outside = 0
        for j in sep.outside_ids:
            outside |= 1 << to_global[j]
        boundary_ids = [to_global[j] for j in sep.boundary_ids]
        boundary_objs = [self.ctx.objs[i] for i in boundary_ids]

        # Exact Pack of the boundary caps the enumeration depth; nothing is
        # missed since no optimal independent set can pack the boundary harder.
        bcap = self._exact_pack_value(boundary_objs)

        bctx = IntersectionContext(boundary_objs)
        best = None
        nodes = 1
        depth = 0
        for local in _enum_indep_masks(bctx, bctx.full_mask(), bcap, as_lists=True):
            chosen = [boundary_ids[j] for j in local]
            nmask = 0
            for i in chosen:
                nmask |= self.ctx.nbr[i]
            sub_in = inside & ~nmask
            sub_out = outside & ~nmask
            if self._parallel_remaining > 0:
                self._parallel_remaining -= 1
                with ThreadPoolExecutor(max_workers=2) as pool:
                    fin = pool.submit(self.solve, sub_in)
                    fout = pool.submit(self.solve, sub_out)
                    rin, rout = fin.result(), fout.result()
            else:
                rin = self.solve(sub_in)
                rout = self.solve(sub_out)
            nodes += rin[2] + rout[2]
            depth = max(depth, 1 + max(rin[3], rout[3]))
            value = len(chosen) + rin[0] + rout[0]
            if best is None or value > best[0]:
                best = (value, sorted(chosen + rin[1] + rout[1]))
        assert best is not None
        return best[0], best[1], nodes, depth

    def _exact_pack_value(self, objs) -> int:
        if not objs:
            return 0
        g = greedy_pack(objs).value
        cap = max(g, 1)
        while True:
            res = exact_small_pack(objs, cap)
            if res is not OVERFLOW:
                return res.value
            cap = min(len(objs), cap * 2)


def solve_pack(inst: Instance, cfg: Optional[SolveConfig] = None) -> PackSolution:
    cfg = cfg or SolveConfig()
    start = time.perf_counter()
    ctx = IntersectionContext(inst.objects)
    budget = _Budget(cfg.node_cap)
    search = _PackSearch(ctx, cfg, budget)
    try:
        value, witness, nodes, depth = search.solve(ctx.full_mask())
        optimal = True
    except _CapStop:
        est = greedy_pack(inst.objects, ctx=ctx)
        value, witness, nodes, depth = est.value, est.witness, budget.count, 0
        optimal = False
    return PackSolution(
        value=value,
        witness=witness,
        nodes=nodes if optimal else budget.count,
        depth=depth,
        wall_time=time.perf_counter() - start,
        optimal=optimal,
    )


class _PierceSearch:
    def __init__(self, ctx: IntersectionContext, cfg: SolveConfig, budget: _Budget):
        self.ctx = ctx
        self.cfg = cfg
        self.budget = budget
        self.sepcfg = cfg.separator_config()

    def solve(self, mask: int) -> Tuple[int, List[Point], int, int]:
        self.budget.tick()
        if not mask:
            return 0, [], 1, 0
        ids = mask_to_ids(mask)
        sub = [self.ctx.objs[i] for i in ids]
        g = greedy_pierce(sub).value
        if g <= self.cfg.base_threshold:
            return self._base_case(sub)
        sep = separate(sub, self.sepcfg)
        total = sep.mu_total.value
        unbalanced = (
            sep.degenerate
            or len(sep.boundary_ids) == len(ids)
            or max(sep.mu_inside.value, sep.mu_outside.value)
            > self.cfg.balance_cap * total
        )
        if unbalanced:
            return self._pivot(mask, ids, sub)
        return self._separated(mask, ids, sub, sep)

    def _base_case(self, sub):
        cap = max(1, min(self.cfg.base_threshold, len(sub)))
        while True:
            res = exact_small_pierce(sub, cap)
            if res is not OVERFLOW:
                break
            cap = min(len(sub), cap * 2)
        return res.value, list(res.witness), 1, 0

    def _pivot(self, mask, ids, sub):
        # Branch over candidate points inside the smallest object.
        points = cand.candidate_pierce_points(sub)
        cov_local = cand.coverage_masks(sub, points)
        o_local = min(range(len(sub)), key=lambda j: (size(sub[j]), j))
        best = None
        nodes = 1
        depth = 0
        for k, p in enumerate(points):
            if not cov_local[k] & (1 << o_local):
                continue
            removed = 0
            for j in range(len(sub)):
                if cov_local[k] & (1 << j):
                    removed |= 1 << ids[j]
            r = self.solve(mask & ~removed)
            nodes += r[2]
            depth = max(depth, 1 + r[3])
            value = 1 + r[0]
            if best is None or value < best[0]:
                best = (value, [p] + r[1])
        assert best is not None, "candidate set must pierce the pivot object"
        return best[0], best[1], nodes, depth

    def _separated(self, mask, ids, sub, sep: SeparatorResult):
        points = cand.candidate_pierce_points(sub)
        cov_local = cand.coverage_masks(sub, points)
        points, cov_local = prune_dominated(points, cov_local)
        n_local = len(sub)
        order_local = sorted(range(n_local), key=lambda j: (size(sub[j]), j))

        inside_local = 0
        for j in sep.inside_ids:
            inside_local |= 1 << j
        outside_local = 0
        for j in sep.outside_ids:
            outside_local |= 1 << j
        boundary_local = 0
        for j in sep.boundary_ids:
            boundary_local |= 1 << j

        state = {"best": None, "nodes": 1, "depth": 0}

        def to_global(local_mask: int) -> int:
            m = 0
            for j in mask_to_ids(local_mask):
                m |= 1 << ids[j]
            return m

        def dfs(unb: int, removed: int, picked: List[Point]):
            best = state["best"]
            if best is not None and len(picked) >= best[0]:
                return
            if not unb:
                rin = self.solve(to_global(inside_local & ~removed))
                rout = self.solve(to_global(outside_local & ~removed))
                state["nodes"] += rin[2] + rout[2]
                state["depth"] = max(state["depth"], 1 + max(rin[3], rout[3]))
                value = len(picked) + rin[0] + rout[0]
                if state["best"] is None or value < state["best"][0]:
                    state["best"] = (value, list(picked) + rin[1] + rout[1])
                return
            o = next(j for j in order_local if unb & (1 << j))
            obit = 1 << o
            for k in range(len(points)):
                if cov_local[k] & obit:
                    picked.append(points[k])
                    dfs(unb & ~cov_local[k], removed | cov_local[k], picked)
                    picked.pop()

        dfs(boundary_local, 0, [])
        best = state["best"]
        assert best is not None
        return best[0], best[1], state["nodes"], state["depth"]


def solve_pierce(inst: Instance, cfg: Optional[SolveConfig] = None) -> PierceSolution:
    cfg = cfg or SolveConfig()
    start = time.perf_counter()
    ctx = IntersectionContext(inst.objects)
    budget = _Budget(cfg.node_cap)
    search = _PierceSearch(ctx, cfg, budget)
    try:
        value, witness, nodes, depth = search.solve(ctx.full_mask())
        optimal = True
    except _CapStop:
        est = greedy_pierce(list(inst.objects))
        value, witness, nodes, depth = est.value, est.witness, budget.count, 0
        optimal = False
    return PierceSolution(
        value=value,
        witness=witness,
        nodes=nodes if optimal else budget.count,
        depth=depth,
        wall_time=time.perf_counter() - start,
        optimal=optimal,
    )


def branch_on_pivot(inst: Instance, cfg: Optional[SolveConfig] = None, problem: str = "pack"):
    """One forced pivot step, recursing through the normal solver.

    Exists so the fallback path can be exercised directly; results match the
    separator path on any instance.
    """
    cfg = cfg or SolveConfig()
    ctx = IntersectionContext(inst.objects)
    budget = _Budget(cfg.node_cap)
    start = time.perf_counter()
    if problem == "pack":
        search = _PackSearch(ctx, cfg, budget)
        if inst.n == 0:
            return PackSolution(0, [], 1, 0, 0.0)
        value, wit, nodes, depth = search._pivot(
            ctx.full_mask(), list(range(inst.n))
        )
        return PackSolution(value, wit, nodes, depth, time.perf_counter() - start)
    if problem == "pierce":
        search = _PierceSearch(ctx, cfg, budget)
        if inst.n == 0:
            return PierceSolution(0, [], 1, 0, 0.0)
        value, wit, nodes, depth = search._pivot(
            ctx.full_mask(), list(range(inst.n)), list(inst.objects)
        )
        return PierceSolution(value, wit, nodes, depth, time.perf_counter() - start)
    raise ValueError(f"unknown problem {problem!r}")

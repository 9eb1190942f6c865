"""Packing and piercing of fat objects via measure-balanced box separators."""

from .geometry import (
    AxisBox,
    Ball,
    BoxRegion,
    RegionClass,
    center,
    center_in,
    classify,
    intersects,
    magnify,
    size,
    split_longest,
)
from .instances import Instance, gen_instance, read_instance, write_instance
from .measure import (
    OVERFLOW,
    MeasureEstimate,
    exact_small_pack,
    exact_small_pierce,
    greedy_pack,
    greedy_pierce,
)
from .oracle import OracleResult, brute_pack, brute_pierce, fine_grid_pierce
from .ptas import PtasConfig, ptas_pack, ptas_pierce
from .separator import SeparatorConfig, SeparatorResult, find_base_box, separate, shell_sweep
from .solver import (
    PackSolution,
    PierceSolution,
    SolveConfig,
    branch_on_pivot,
    candidate_pierce_points,
    enumerate_boundary_independent_sets,
    neighborhood,
    solve_pack,
    solve_pierce,
)

__all__ = [
    "AxisBox",
    "Ball",
    "BoxRegion",
    "Instance",
    "MeasureEstimate",
    "OVERFLOW",
    "OracleResult",
    "PackSolution",
    "PierceSolution",
    "PtasConfig",
    "RegionClass",
    "SeparatorConfig",
    "SeparatorResult",
    "SolveConfig",
    "branch_on_pivot",
    "brute_pack",
    "brute_pierce",
    "candidate_pierce_points",
    "center",
    "center_in",
    "classify",
    "enumerate_boundary_independent_sets",
    "exact_small_pack",
    "exact_small_pierce",
    "find_base_box",
    "fine_grid_pierce",
    "gen_instance",
    "greedy_pack",
    "greedy_pierce",
    "intersects",
    "magnify",
    "neighborhood",
    "ptas_pack",
    "ptas_pierce",
    "read_instance",
    "separate",
    "shell_sweep",
    "size",
    "solve_pack",
    "solve_pierce",
    "split_longest",
    "write_instance",
]

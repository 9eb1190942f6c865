"""Benchmark harness: run solver suites, emit CSV with node-law checks.

Rows are sorted by (label, solver) before emission, so running entries in
any order (or in parallel) never changes the output bytes.  Reruns of the
same suite are byte-identical except for the wall_time column.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .calibration import NODE_LAW_EXPONENT, node_law_bound
from .instances import Instance, gen_instance
from .ptas import PtasConfig, ptas_pack, ptas_pierce
from .solver import SolveConfig, solve_pack, solve_pierce

CSV_COLUMNS = [
    "label",
    "n",
    "d",
    "family",
    "solver",
    "value",
    "nodes",
    "depth",
    "wall_time",
    "node_law_bound",
    "node_law_ok",
    "aborted",
    "config_digest",
]


@dataclass
class BenchRecord:
    label: str
    n: int
    d: int
    family: str
    solver: str
    value: int
    nodes: int
    depth: int
    wall_time: float
    node_law_bound: float
    node_law_ok: bool
    aborted: bool
    config_digest: str


def config_digest(cfg: SolveConfig) -> str:
    payload = json.dumps(asdict(cfg), sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


def _run_one(inst: Instance, family: str, solver: str, cfg: SolveConfig) -> BenchRecord:
    if solver == "pack":
        sol = solve_pack(inst, cfg)
    elif solver == "pierce":
        sol = solve_pierce(inst, cfg)
    elif solver == "ptas-pack":
        sol = ptas_pack(inst, PtasConfig(epsilon=cfg.epsilon, solve=cfg))
    elif solver == "ptas-pierce":
        sol = ptas_pierce(inst, PtasConfig(epsilon=cfg.epsilon, solve=cfg))
    else:
        raise ValueError(f"unknown solver {solver!r}")
    bound = node_law_bound(inst.n, sol.value, inst.dim)
    return BenchRecord(
        label=inst.label,
        n=inst.n,
        d=inst.dim,
        family=family,
        solver=solver,
        value=sol.value,
        nodes=sol.nodes,
        depth=sol.depth,
        wall_time=sol.wall_time,
        node_law_bound=bound,
        node_law_ok=sol.nodes <= bound,
        aborted=not getattr(sol, "optimal", True),
        config_digest=config_digest(cfg),
    )


def run_bench(
    suite: Sequence[dict], out_path: Optional[str] = None
) -> List[BenchRecord]:
    """Run a suite of {instance spec or Instance, solvers, config} entries.

    Entry keys: either "instance" (an Instance) or generator fields
    ("family", "d", plus gen_instance kwargs); "solvers" (list, default
    ["pack"]); optional "config" dict of SolveConfig overrides.
    """
    records: List[BenchRecord] = []
    for entry in suite:
        if "instance" in entry:
            inst = entry["instance"]
            family = entry.get("family", "custom")
        else:
            gen_kwargs = {
                key: entry[key]
                for key in ("shape", "n", "k", "seed", "density", "clusters", "cluster_size", "label")
                if key in entry
            }
            inst = gen_instance(entry["family"], entry["d"], **gen_kwargs)
            family = entry["family"]
        cfg = SolveConfig(**entry.get("config", {}))
        for solver in entry.get("solvers", ["pack"]):
            records.append(_run_one(inst, family, solver, cfg))
    records.sort(key=lambda r: (r.label, r.solver))
    text = to_csv(records)
    if out_path is not None:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    return records


def to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.label,
                r.n,
                r.d,
                r.family,
                r.solver,
                r.value,
                r.nodes,
                r.depth,
                f"{r.wall_time:.6f}",
                f"{r.node_law_bound:.6g}",
                int(r.node_law_ok),
                int(r.aborted),
                r.config_digest,
            ]
        )
    return buf.getvalue()

"""Node-count scaling report on the grid benchmark family.

Runs the exact pack and pierce solvers on d=2 grids of growing size, emits
the bench CSV, and prints the fitted node-law exponent per row, i.e. the K
solving nodes = n^(K * sqrt(p)).  Compare against the frozen
NODE_LAW_EXPONENT in fatsep.calibration.

Usage: python scripts/scaling_report.py [out.csv]
"""
import math
import sys

sys.path.insert(0, "src")

from fatsep.bench import run_bench, to_csv
from fatsep.calibration import NODE_LAW_EXPONENT


def main():
    suite = [
        {
            "family": "grid",
            "d": 2,
            "k": k,
            "seed": k,
            "label": f"grid-k{k}",
            "solvers": ["pack", "pierce"],
            "config": {"base_threshold": 3},
        }
        for k in (2, 3, 4, 5)
    ]
    records = run_bench(suite, sys.argv[1] if len(sys.argv) > 1 else None)
    print(to_csv(records), end="")
    print(f"\n# frozen node-law exponent K = {NODE_LAW_EXPONENT}")
    for r in records:
        if r.nodes > 1 and r.n > 1:
            fitted = math.log(r.nodes) / (math.log(r.n) * math.sqrt(r.value))
        else:
            fitted = 0.0
        print(f"# {r.label} {r.solver}: nodes={r.nodes} fitted K={fitted:.4f}")


if __name__ == "__main__":
    main()

"""Command line interface.

Exit codes: 0 success, 2 parse/spec error, 3 node-cap abort (the best-so-far
record is still written).  Timings never go into --out files, so every
non-timing output is byte-reproducible.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bench import run_bench, to_csv
from .instances import Instance, ParseError, gen_instance, read_instance, write_instance
from .oracle import OracleSizeError, brute_pack, brute_pierce
from .ptas import PtasConfig, ptas_pack, ptas_pierce
from .render import render_svg
from .separator import SeparatorConfig, separate
from .solver import SolveConfig, solve_pack, solve_pierce

EXIT_OK = 0
EXIT_SPEC_ERROR = 2
EXIT_NODE_CAP = 3


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_solution(problem: str, sol) -> str:
    if problem in ("pack", "ptas-pack"):
        witness = " ".join(str(i) for i in sol.witness)
    else:
        witness = " ".join(f"{p[0]!r},{p[1]!r}" if len(p) == 2 else ",".join(repr(c) for c in p) for p in sol.witness)
    lines = [
        "fatsep-solution v1",
        f"problem={problem}",
        f"value={sol.value}",
        f"witness={witness}",
        f"nodes={sol.nodes}",
        f"depth={sol.depth}",
        f"optimal={'true' if sol.optimal else 'false'}",
    ]
    return "\n".join(lines) + "\n"


def _format_separator(sep) -> str:
    def fmt_box(b):
        return " ".join(repr(c) for c in b.low + b.high)

    lines = [
        "fatsep-separator v1",
        f"box={fmt_box(sep.box)}",
        f"base_box={fmt_box(sep.base_box)}",
        f"m_star={sep.m_star!r}",
        f"inside={' '.join(map(str, sep.inside_ids))}",
        f"outside={' '.join(map(str, sep.outside_ids))}",
        f"boundary={' '.join(map(str, sep.boundary_ids))}",
        f"mu_total={sep.mu_total.value}",
        f"mu_inside={sep.mu_inside.value}",
        f"mu_outside={sep.mu_outside.value}",
        f"mu_boundary={sep.mu_boundary.value}",
        f"degenerate={'true' if sep.degenerate else 'false'}",
    ]
    return "\n".join(lines) + "\n"


def _add_shared(p: argparse.ArgumentParser):
    p.add_argument("--in", dest="inp", help="instance file to read")
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--base-threshold", type=int, default=12)
    p.add_argument("--node-cap", type=int, default=10**8)
    p.add_argument("--svg", help="also write an SVG figure (d=2 only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatsep",
        description="Packing and piercing of fat objects via box separators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    _add_shared(p)
    p.add_argument("--family", required=True, choices=["grid", "random", "cluster"])
    p.add_argument("--shape", default="ball", choices=["ball", "box"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--clusters", type=int, default=0)
    p.add_argument("--cluster-size", type=int, default=0)
    p.add_argument("--label", default="")

    for name in ("pack", "pierce", "ptas-pack", "ptas-pierce"):
        p = sub.add_parser(name, help=f"run the {name} solver")
        _add_shared(p)
        p.add_argument("--parallel", action="store_true", help="parallel branch evaluation")

    p = sub.add_parser("separator", help="compute a separator box")
    _add_shared(p)

    p = sub.add_parser("oracle", help="brute-force reference value")
    _add_shared(p)
    p.add_argument("--problem", required=True, choices=["pack", "pierce"])

    p = sub.add_parser("bench", help="run a benchmark suite, emit CSV")
    _add_shared(p)
    p.add_argument("--family", default="grid", choices=["grid", "random", "cluster"])
    p.add_argument("--shape", default="ball", choices=["ball", "box"])
    p.add_argument("--ks", default="2,3,4,5", help="comma-separated grid k values")
    p.add_argument("--solvers", default="pack", help="comma-separated solver names")

    p = sub.add_parser("render", help="render an instance to SVG")
    _add_shared(p)
    p.add_argument(
        "--overlay",
        default="none",
        choices=["none", "separator", "pack", "pierce"],
    )
    return parser


def _load(args) -> Instance:
    if not args.inp:
        raise SystemExit("--in is required for this command")
    return read_instance(args.inp)


def _solve_config(args) -> SolveConfig:
    return SolveConfig(
        base_threshold=args.base_threshold,
        epsilon=args.epsilon,
        node_cap=args.node_cap,
        parallel_branches=getattr(args, "parallel", False),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, OracleSizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC_ERROR


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "gen":
        inst = gen_instance(
            args.family,
            args.dim,
            shape=args.shape,
            n=args.n,
            k=args.k,
            seed=args.seed,
            density=args.density,
            clusters=args.clusters,
            cluster_size=args.cluster_size,
            label=args.label,
        )
        if args.out:
            write_instance(inst, args.out)
        else:
            from .instances import format_instance

            sys.stdout.write(format_instance(inst))
        if args.svg:
            render_svg(inst, None, args.svg)
        return EXIT_OK

    if cmd in ("pack", "pierce", "ptas-pack", "ptas-pierce"):
        inst = _load(args)
        cfg = _solve_config(args)
        if cmd == "pack":
            sol = solve_pack(inst, cfg)
        elif cmd == "pierce":
            sol = solve_pierce(inst, cfg)
        elif cmd == "ptas-pack":
            sol = ptas_pack(inst, PtasConfig(epsilon=args.epsilon, solve=cfg))
        else:
            sol = ptas_pierce(inst, PtasConfig(epsilon=args.epsilon, solve=cfg))
        _emit(_format_solution(cmd, sol), args.out)
        print(f"wall_time={sol.wall_time:.6f}s", file=sys.stderr)
        if args.svg:
            render_svg(inst, sol, args.svg)
        return EXIT_OK if sol.optimal else EXIT_NODE_CAP

    if cmd == "separator":
        inst = _load(args)
        sep = separate(list(inst.objects), SeparatorConfig(epsilon=args.epsilon))
        _emit(_format_separator(sep), args.out)
        if args.svg:
            render_svg(inst, sep, args.svg)
        return EXIT_OK

    if cmd == "oracle":
        inst = _load(args)
        if args.problem == "pack":
            res = brute_pack(inst)
            witness = " ".join(map(str, res.witness))
        else:
            res = brute_pierce(inst)
            witness = " ".join(f"{p[0]!r},{p[1]!r}" if len(p) == 2 else ",".join(repr(c) for c in p) for p in res.witness)
        _emit(
            f"fatsep-oracle v1\nproblem={args.problem}\nvalue={res.value}\n"
            f"witness={witness}\nmethod={res.method}\n",
            args.out,
        )
        return EXIT_OK

    if cmd == "bench":
        ks = [int(x) for x in args.ks.split(",") if x]
        solvers = [s.strip() for s in args.solvers.split(",") if s.strip()]
        suite = [
            {
                "family": args.family,
                "d": args.dim,
                "shape": args.shape,
                "k": k,
                "n": args.n if hasattr(args, "n") else 0,
                "seed": args.seed,
                "solvers": solvers,
                "config": {
                    "base_threshold": args.base_threshold,
                    "epsilon": args.epsilon,
                    "node_cap": args.node_cap,
                },
            }
            for k in ks
        ]
        records = run_bench(suite)
        _emit(to_csv(records), args.out)
        return EXIT_OK

    if cmd == "render":
        inst = _load(args)
        if not args.svg:
            raise SystemExit("render requires --svg PATH")
        overlay = None
        if args.overlay == "separator":
            overlay = separate(list(inst.objects), SeparatorConfig(epsilon=args.epsilon))
        elif args.overlay == "pack":
            overlay = solve_pack(inst, _solve_config(args))
        elif args.overlay == "pierce":
            overlay = solve_pierce(inst, _solve_config(args))
        render_svg(inst, overlay, args.svg)
        return EXIT_OK

    raise SystemExit(f"unknown command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())

"""Command line: ``domset gen | solve | bench | export-lp``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .bench import ALGORITHMS, append_csv, format_csv, read_manifest, run_batch, run_solver
from .errors import DomsetError
from .exact import Proof, SolverConfig
from .graph import edges_for_density, parse_dimacs, random_connected, write_dimacs
from .lp import write_lp

EXIT_OK, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2


def _solver_flags(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=None, help="base-size fraction for dbs, in (0, 1)")
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--node-cap", type=int, default=None)
    p.add_argument("--max-bases", type=int, default=None, help="dbs bases per level (default 10n)")
    p.add_argument("--pruning", action="store_true", help="bds coverage-count pruning")


def _config(args) -> SolverConfig:
    return SolverConfig(
        seed=args.seed, time_limit_s=args.time_limit, node_cap=args.node_cap,
        max_bases_per_level=args.max_bases, alpha=args.alpha, pruning=args.pruning,
    )


def _write(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    m = args.m if args.m is not None else edges_for_density(args.n, args.density)
    g = random_connected(args.n, m, args.seed)
    _write(write_dimacs(g, seed=args.seed), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = parse_dimacs(Path(args.path).read_bytes())
    record = run_solver(g, args.algo, _config(args), instance=Path(args.path).stem)
    print(record.to_json())
    if args.csv:
        append_csv(args.csv, record)
    if args.algo == "bds" and record.proof == Proof.UPPER_BOUND_ONLY.value:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_bench(args) -> int:
    algos = [a for chunk in args.algo for a in chunk.split(",") if a]
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad:
        raise DomsetError(f"unknown algorithm(s) {bad}")
    records = run_batch(read_manifest(args.manifest), algos, _config(args), jobs=args.jobs)
    _write(format_csv(records), args.csv)
    return EXIT_OK


def cmd_export_lp(args) -> int:
    g = parse_dimacs(Path(args.path).read_bytes())
    _write(write_lp(g), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domset", description="Minimum dominating set solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a seeded random connected graph in DIMACS format")
    p.add_argument("--n", type=int, required=True)
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--m", type=int)
    size.add_argument("--density", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve one DIMACS instance and print a JSON run record")
    p.add_argument("path")
    p.add_argument("--algo", choices=ALGORITHMS, default="bds")
    p.add_argument("--csv", help="append the record to this CSV file")
    _solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run algorithms over a manifest and emit CSV")
    p.add_argument("manifest", help="file of 'n m seed' lines, or a directory of DIMACS files")
    p.add_argument("--algo", action="append", default=None,
                   help="algorithm(s), comma separated or repeated (default greedy,dbs,bds)")
    p.add_argument("--csv", help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    _solver_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-lp", help="write the covering integer program as an LP file")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_lp)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("DOMSET_LOG", "error").upper()
    logging.basicConfig(level=getattr(logging, level, logging.ERROR), format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "algo", "") is None:
        args.algo = ["greedy,dbs,bds"]
    try:
        return args.func(args)
    except (DomsetError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

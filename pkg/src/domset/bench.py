"""Run records and the batch comparison harness."""
from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from statistics import mean
from typing import Optional

from .bounds import bounds
from .exact import Proof, SolverConfig, bds_solve
from .graph import Graph, parse_dimacs, random_connected
from .greedy import greedy_solve
from .heuristic import dbs_solve
from .oracle import brute_force

log = logging.getLogger(__name__)

ALGORITHMS = ("greedy", "bds", "dbs", "oracle")
CSV_HEADER = ("instance", "n", "m", "density", "algorithm", "seed", "size", "L", "ub_leaf",
              "ub_maxdeg", "elapsed_ms", "proof", "alpha", "counter")


@dataclass
class RunRecord:
    instance: str
    n: int
    m: int
    density: float
    algorithm: str
    seed: int
    size: Optional[int]
    L: Optional[int]
    ub_leaf: Optional[int]
    ub_maxdeg: Optional[int]
    elapsed_ms: float
    proof: str
    alpha: Optional[float]
    counter: Optional[int]
    witness: Optional[list] = None
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    def csv_row(self) -> list:
        row = []
        for name in CSV_HEADER:
            val = getattr(self, name)
            if name == "density":
                val = f"{val:.6f}"
            elif name == "elapsed_ms":
                val = f"{val:.3f}"
            elif name == "alpha" and val is not None:
                val = f"{val:.6f}"
            elif name == "proof" and self.error:
                val = f"Error: {self.error}"
            row.append("" if val is None else val)
        return row


def run_solver(g: Graph, algo: str, cfg: SolverConfig, instance: str = "") -> RunRecord:
    """Solve once and report; ``elapsed_ms`` covers the solver call only."""
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")
    rep = bounds(g)
    alpha = counter = None
    t0 = time.perf_counter()
    if algo == "greedy":
        sol = greedy_solve(g)
        elapsed = time.perf_counter() - t0
        size, witness, counter = len(sol), sol.members, 0
        proof = Proof.EXACT if size == rep.L else Proof.UPPER_BOUND_ONLY
    elif algo == "bds":
        res = bds_solve(g, cfg)
        elapsed = time.perf_counter() - t0
        size, witness, counter, proof = res.gamma, res.members, res.nodes_visited, res.proof
    elif algo == "dbs":
        res = dbs_solve(g, cfg)
        elapsed = time.perf_counter() - t0
        size, witness, counter, alpha = res.size, res.members, res.bases_tried, res.alpha
        proof = Proof.EXACT if size == rep.L else Proof.UPPER_BOUND_ONLY
    else:
        res = brute_force(g)
        elapsed = time.perf_counter() - t0
        size, witness, counter, proof = res.gamma, res.witness, res.subsets_tested, Proof.EXACT
    return RunRecord(
        instance=instance, n=g.n, m=g.m, density=g.density, algorithm=algo, seed=cfg.seed,
        size=size, L=rep.L, ub_leaf=rep.ub_leaf, ub_maxdeg=rep.ub_maxdeg,
        elapsed_ms=elapsed * 1000.0, proof=Proof(proof).value, alpha=alpha, counter=counter,
        witness=sorted(witness),
    )


# --- manifests ------------------------------------------------------------

INSTANCE_SUFFIXES = (".dimacs", ".col", ".gr", ".txt")


@dataclass(frozen=True)
class Instance:
    id: str
    n: Optional[int] = None
    m: Optional[int] = None
    seed: Optional[int] = None
    path: Optional[str] = None

    def load(self) -> Graph:
        if self.path is not None:
            return parse_dimacs(Path(self.path).read_bytes())
        return random_connected(self.n, self.m, self.seed)


def read_manifest(source) -> list[Instance]:
    """Instances from a directory of DIMACS files or a text file of ``n m seed`` lines."""
    path = Path(source)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.suffix in INSTANCE_SUFFIXES)
        return [Instance(id=p.stem, path=str(p)) for p in files]
    out = []
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 3:
            raise ValueError(f"{path}:{lineno}: expected 'n m seed', got {raw!r}")
        n, m, seed = map(int, parts)
        out.append(Instance(id=f"n{n}_m{m}_s{seed}", n=n, m=m, seed=seed))
    return out


def _run_instance(job) -> list[RunRecord]:
    inst, algos, cfg = job
    try:
        g = inst.load()
    except Exception as exc:  # recorded in the row, never fatal to the batch
        return [_error_record(inst, a, cfg, exc) for a in algos]
    rows = []
    for algo in algos:
        try:
            rows.append(run_solver(g, algo, cfg, inst.id))
        except Exception as exc:
            log.info("instance %s algo %s failed: %s", inst.id, algo, exc)
            rows.append(_error_record(inst, algo, cfg, exc, g))
    return rows


def _error_record(inst, algo, cfg, exc, g=None) -> RunRecord:
    return RunRecord(
        instance=inst.id, n=g.n if g else (inst.n or 0), m=g.m if g else (inst.m or 0),
        density=g.density if g else 0.0, algorithm=algo, seed=cfg.seed, size=None, L=None,
        ub_leaf=None, ub_maxdeg=None, elapsed_ms=0.0, proof="", alpha=None, counter=None,
        error=f"{type(exc).__name__}: {exc}",
    )


def run_batch(instances, algos, cfg: SolverConfig, jobs: int = 1) -> list[RunRecord]:
    """Rows in manifest order, one per (instance, algorithm)."""
    work = [(inst, tuple(algos), cfg) for inst in instances]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_instance, work))
    else:
        chunks = [_run_instance(w) for w in work]
    return [row for chunk in chunks for row in chunk]


# --- reporting ------------------------------------------------------------


def summarize(records: list[RunRecord]) -> dict:
    """Heuristic quality against the best proven size per instance, and speed ratios."""
    optimum = {}
    for r in records:
        if r.error is None and r.proof == Proof.EXACT.value and r.algorithm in ("bds", "oracle"):
            optimum[r.instance] = r.size
    dbs = [r for r in records if r.algorithm == "dbs" and r.error is None and r.instance in optimum]
    misses = [r for r in dbs if r.size != optimum[r.instance]]
    out = {
        "dbs_compared": len(dbs),
        "dbs_optimal_fraction": (len(dbs) - len(misses)) / len(dbs) if dbs else None,
        "dbs_mean_gap": mean(r.size - optimum[r.instance] for r in misses) if misses else 0.0,
        "dbs_mean_ratio": mean(r.size / optimum[r.instance] for r in misses) if misses else 1.0,
    }
    totals = {}
    for r in records:
        if r.error is None:
            totals[r.algorithm] = totals.get(r.algorithm, 0.0) + r.elapsed_ms
    algos = [a for a in ALGORITHMS if a in totals]
    for i, a in enumerate(algos):
        for b in algos[i + 1 :]:
            if totals[b] > 0:
                out[f"time_ratio_{a}_over_{b}"] = totals[a] / totals[b]
    return out


def format_csv(records: list[RunRecord], footer: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.csv_row())
    if footer and records:
        for key, val in summarize(records).items():
            text = "" if val is None else (f"{val:.6f}" if isinstance(val, float) else str(val))
            buf.write(f"# {key}={text}\n")
    return buf.getvalue()


def append_csv(path, record: RunRecord) -> None:
    path = Path(path)
    new = not path.exists() or path.stat().st_size == 0
    with path.open("a", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if new:
            writer.writerow(CSV_HEADER)
        writer.writerow(record.csv_row())

"""Time the numba kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel (or one end-to-end solve) under both backends
after a warm-up call, so JIT compilation is excluded.
"""
import argparse
import time

import numpy as np

import domset as ds
from domset import _jit, kernels
from domset.graph import edges_for_density


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    sparse = ds.random_connected(800, edges_for_density(800, 0.02), 1)
    dense = ds.random_connected(1000, edges_for_density(1000, 0.5), 2)
    ring = ds.cycle_graph(90)
    mid = ds.random_connected(150, edges_for_density(150, 0.5), 150)
    low = ds.random_connected(40, edges_for_density(40, 0.2), 40)
    cover = np.random.default_rng(0).integers(0, 2, size=dense.n)
    zeros = np.zeros_like(ring.full_bits)

    def active():
        for _ in range(50):
            kernels.active_degrees(dense.indptr, dense.indices, dense.rows, cover)

    return [
        ("eccentricities n=800 d=0.02", lambda: kernels.eccentricities(sparse.indptr, sparse.indices, sparse.n)),
        ("active_degrees x50 n=1000 d=0.5", active),
        ("subset walk C90 k=4 (exhaustive)", lambda: kernels.search_subsets(ring.nb_bits, np.arange(90), zeros, ring.full_bits, 4)),
        ("bds_solve n=150 d=0.5", lambda: ds.bds_solve(mid)),
        ("bds_solve n=40 d=0.2", lambda: ds.bds_solve(low)),
        ("dbs_solve n=1000 d=0.5", lambda: ds.dbs_solve(dense, ds.SolverConfig(seed=1))),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = ["numba", "numpy"] if _jit.HAVE_NUMBA else ["numpy"]
    print(f"{'case':38s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases():
        row = []
        for b in backends:
            kernels.set_backend(b)
            row.append(best_of(fn, args.repeat))
        line = f"{name:38s}" + "".join(f"{t:11.4f}s" for t in row)
        if len(row) == 2:
            line += f"{row[1] / row[0]:11.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()

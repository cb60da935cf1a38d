"""Time the numba kernels against the numpy fallback on the brute-force
oracles (colouring counts, partition tallies, subset tallies, orientations).

    python3 benchmarks/bench_kernels.py [--repeat N]

The first numba call per kernel is timed separately as the compile/cache-load
cost; the table reports the best of N warm runs.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from hyperchrom import _kernels
from hyperchrom.constructions import complete_hypergraph, h_edge, random_hypergraph
from hyperchrom.multigraph import Multigraph


def cases():
    rng = random.Random(1)
    h8 = random_hypergraph(rng, n_range=(8, 8), m_range=(8, 8), size_range=(2, 4))
    t8, s8 = _kernels.edge_table(h8.edges)
    h10 = random_hypergraph(rng, n_range=(10, 10), m_range=(10, 10), size_range=(2, 3))
    t10, s10 = _kernels.edge_table(h10.edges)
    g = h_edge(Multigraph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3))))
    tg, sg = _kernels.edge_table(complete_hypergraph(6).edges + g.edges[:2])
    k5 = Multigraph(5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)) * 2)
    arcs = np.asarray(k5.edges[:16], dtype=np.int64)
    return [
        ("count_colourings n=8 k=5", "count_colourings", (8, t8, s8, 5)),
        ("partition_tally n=10", "partition_tally", (10, t10, s10)),
        ("component_tally m=17", "component_tally", (10, tg, sg)),
        ("orientation_counts m=16", "orientation_counts", (5, arcs, False)),
    ]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels.numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':28s} {'first numba':>12s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for label, name, call in cases():
        nb = getattr(_kernels.numba_impl, name)
        npf = getattr(_kernels.numpy_impl, name)
        t = time.perf_counter()
        nb(*call)
        first = time.perf_counter() - t
        t_nb, r_nb = best_of(nb, call, args.repeat)
        t_np, r_np = best_of(npf, call, args.repeat)
        assert np.array_equal(np.asarray(r_nb), np.asarray(r_np)), label
        print(f"{label:28s} {first:12.4f} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()

import random
import subprocess
import sys

import numpy as np
import pytest

from hyperchrom import _kernels
from hyperchrom.constructions import random_hypergraph, random_multigraph, random_simple_graph

pytestmark = pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")


def _cases(seed=0, count=25):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_hypergraph(rng, n_range=(1, 6), m_range=(0, 6), size_range=(1, 4), connected=False)


def test_flag_selects_backend(monkeypatch):
    monkeypatch.delenv("HYPERCHROM_DISABLE_JIT", raising=False)
    assert _kernels.backend_name() == "numba"
    for value in ("1", "true", "YES", "on"):
        monkeypatch.setenv("HYPERCHROM_DISABLE_JIT", value)
        assert _kernels.backend_name() == "numpy"
    monkeypatch.setenv("HYPERCHROM_DISABLE_JIT", "0")
    assert _kernels.backend_name() == "numba"


def test_flag_in_fresh_process():
    code = "from hyperchrom import backend_name; print(backend_name())"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"HYPERCHROM_DISABLE_JIT": "1", "PATH": ""},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_colouring_parity():
    nb, npi = _kernels.numba_impl, _kernels.numpy_impl
    for h in _cases(1):
        table, sizes = _kernels.edge_table(h.edges)
        for k in range(0, 4):
            assert nb.count_colourings(h.n, table, sizes, k) == npi.count_colourings(h.n, table, sizes, k)


def test_partition_and_component_parity():
    nb, npi = _kernels.numba_impl, _kernels.numpy_impl
    for h in _cases(2):
        table, sizes = _kernels.edge_table(h.edges)
        assert np.array_equal(nb.partition_tally(h.n, table, sizes), npi.partition_tally(h.n, table, sizes))
        assert np.array_equal(nb.component_tally(h.n, table, sizes), npi.component_tally(h.n, table, sizes))


def test_orientation_parity():
    nb, npi = _kernels.numba_impl, _kernels.numpy_impl
    rng = random.Random(3)
    for _ in range(40):
        g = random_multigraph(rng, rng.randint(1, 5), rng.randint(0, 8), loops=False)
        arcs = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
        assert tuple(nb.orientation_counts(g.n, arcs, False)) == tuple(npi.orientation_counts(g.n, arcs, False))


def test_independent_parity():
    nb, npi = _kernels.numba_impl, _kernels.numpy_impl
    rng = random.Random(4)
    for _ in range(40):
        g = random_simple_graph(rng, rng.randint(1, 9))
        adj = np.asarray(g.adjacency_masks(), dtype=np.int64)
        assert np.array_equal(nb.independent_tally(g.n, adj), npi.independent_tally(g.n, adj))


def test_partition_tally_counts_bell_numbers(backend):
    bell = [1, 1, 2, 5, 15, 52, 203, 877]
    for n in range(1, 8):
        assert sum(_kernels.partition_tally(n, ())) == bell[n]


def test_edge_table_padding():
    table, sizes = _kernels.edge_table(((0, 1), (0, 1, 2)))
    assert table.shape == (2, 3) and list(sizes) == [2, 3]
    table, sizes = _kernels.edge_table(())
    assert len(sizes) == 0


def test_benchmark_script_runs():
    from pathlib import Path

    script = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run(
        [sys.executable, str(script), "--repeat", "1"], capture_output=True, text=True, check=True
    )
    assert "speedup" in out.stdout and len(out.stdout.splitlines()) == 5

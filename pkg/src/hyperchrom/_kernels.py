"""Enumeration kernels behind the brute-force oracles.

Every kernel exists twice: a numba ``@njit`` loop and a vectorised pure-numpy
version.  The public names in this module dispatch to the numba versions
unless ``HYPERCHROM_DISABLE_JIT`` is set to a truthy value (or numba is not
importable), in which case the numpy versions are used.  Both are always
reachable through :data:`numba_impl` and :data:`numpy_impl` so the benchmark
and the tests can compare them.

Inputs are small integer arrays: edges are passed as a padded ``(m, width)``
vertex table (``-1`` fills unused slots) plus a length vector.  Results are
``int64`` tallies; callers convert to Python ints before doing algebra.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = "HYPERCHROM_DISABLE_JIT"
_CHUNK = 1 << 16


def jit_requested() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def edge_table(edges) -> tuple[np.ndarray, np.ndarray]:
    """Pack a list of vertex tuples into a padded table and a length vector."""
    m = len(edges)
    width = max((len(e) for e in edges), default=1)
    table = np.full((m, max(width, 1)), -1, dtype=np.int64)
    sizes = np.zeros(m, dtype=np.int64)
    for i, e in enumerate(edges):
        table[i, : len(e)] = e
        sizes[i] = len(e)
    return table, sizes


# ---------------------------------------------------------------------------
# numpy versions


def _np_mono_mask(labels: np.ndarray, table: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    """Rows of ``labels`` in which some edge is monochromatic."""
    bad = np.zeros(labels.shape[0], dtype=bool)
    for e in range(table.shape[0]):
        verts = table[e, : sizes[e]]
        first = labels[:, verts[0]]
        mono = np.ones(labels.shape[0], dtype=bool)
        for v in verts[1:]:
            mono &= labels[:, v] == first
        bad |= mono
    return bad


def np_count_colourings(n: int, table: np.ndarray, sizes: np.ndarray, k: int) -> int:
    if n == 0:
        return 1
    if k == 0:
        return 0
    total = k**n
    powers = k ** np.arange(n, dtype=np.int64)
    good = 0
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        colours = (codes[:, None] // powers[None, :]) % k
        good += int(np.count_nonzero(~_np_mono_mask(colours, table, sizes)))
    return good


def _np_restricted_growth(n: int) -> np.ndarray:
    rows = np.zeros((1, 1), dtype=np.int64)
    for _ in range(1, n):
        top = rows.max(axis=1) + 2
        reps = np.repeat(np.arange(rows.shape[0]), top)
        offsets = np.arange(reps.shape[0]) - np.repeat(np.cumsum(top) - top, top)
        rows = np.column_stack([rows[reps], offsets])
    return rows


def np_partition_tally(n: int, table: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    tally = np.zeros(n + 1, dtype=np.int64)
    if n == 0:
        tally[0] = 1
        return tally
    rgs = _np_restricted_growth(n)
    ok = ~_np_mono_mask(rgs, table, sizes)
    blocks = rgs[ok].max(axis=1) + 1
    tally += np.bincount(blocks, minlength=n + 1)[: n + 1]
    return tally


def _np_components(n: int, table: np.ndarray, sizes: np.ndarray, chosen: np.ndarray) -> np.ndarray:
    """Component counts of the spanning sub-hypergraphs selected row-wise by
    the boolean matrix ``chosen`` (rows = subsets, columns = edges)."""
    rows = chosen.shape[0]
    labels = np.tile(np.arange(n, dtype=np.int64), (rows, 1))
    changed = True
    while changed:
        changed = False
        for e in range(table.shape[0]):
            verts = table[e, : sizes[e]]
            if verts.shape[0] < 2:
                continue
            sel = chosen[:, e]
            if not sel.any():
                continue
            sub = labels[sel][:, verts]
            low = sub.min(axis=1)
            # relabel whole classes, not just the edge's own vertices
            cls = labels[sel]
            new = cls.copy()
            for c in range(verts.shape[0]):
                new = np.where(new == sub[:, c : c + 1], low[:, None], new)
            if (new != cls).any():
                changed = True
                labels[sel] = new
    return np.count_nonzero(labels == np.arange(n)[None, :], axis=1)


def np_component_tally(n: int, table: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    m = table.shape[0]
    tally = np.zeros((n + 1, m + 1), dtype=np.int64)
    total = 1 << m
    bits = np.int64(1) << np.arange(m, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        chosen = (masks[:, None] & bits[None, :]) != 0
        comps = _np_components(n, table, sizes, chosen) if n else np.zeros(masks.shape[0], np.int64)
        nedges = chosen.sum(axis=1)
        np.add.at(tally, (comps, nedges), 1)
    return tally


def np_orientation_counts(n: int, arcs: np.ndarray, has_loop: bool) -> tuple[int, int]:
    m = arcs.shape[0]
    total = 1 << m
    bits = np.int64(1) << np.arange(m, dtype=np.int64)
    acyclic = cyclic = 0
    step = max(_CHUNK // max(n * n, 1), 1)
    for start in range(0, total, step):
        masks = np.arange(start, min(start + step, total), dtype=np.int64)
        flip = (masks[:, None] & bits[None, :]) != 0
        tail = np.where(flip, arcs[None, :, 1], arcs[None, :, 0])
        head = np.where(flip, arcs[None, :, 0], arcs[None, :, 1])
        reach = np.zeros((masks.shape[0], n, n), dtype=bool)
        rows = np.arange(masks.shape[0])[:, None]
        reach[rows, tail, head] = True
        for k in range(n):
            reach |= reach[:, :, k, None] & reach[:, None, k, :]
        has_cycle = np.diagonal(reach, axis1=1, axis2=2).any(axis=1)
        if not has_loop:
            acyclic += int(np.count_nonzero(~has_cycle))
        back = reach[rows, head, tail]
        cyclic += int(np.count_nonzero(back.all(axis=1)))
    return acyclic, cyclic


def np_independent_tally(n: int, adj: np.ndarray) -> np.ndarray:
    tally = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        subs = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bad = np.zeros(subs.shape[0], dtype=bool)
        for v in range(n):
            bad |= (((subs >> v) & 1) == 1) & ((subs & adj[v]) != 0)
        good = subs[~bad]
        pop = np.zeros(good.shape[0], dtype=np.int64)
        for v in range(n):
            pop += (good >> v) & 1
        tally += np.bincount(pop, minlength=n + 1)[: n + 1]
    return tally


numpy_impl = SimpleNamespace(
    count_colourings=np_count_colourings,
    partition_tally=np_partition_tally,
    component_tally=np_component_tally,
    orientation_counts=np_orientation_counts,
    independent_tally=np_independent_tally,
)


# ---------------------------------------------------------------------------
# numba versions


def _nb_has_mono(labels, table, sizes):
    for e in range(table.shape[0]):
        first = labels[table[e, 0]]
        mono = True
        for c in range(1, sizes[e]):
            if labels[table[e, c]] != first:
                mono = False
                break
        if mono:
            return True
    return False


def _nb_count_colourings(n, table, sizes, k):
    if n == 0:
        return 1
    if k == 0:
        return 0
    colours = np.zeros(n, dtype=np.int64)
    good = 0
    while True:
        if not _nb_has_mono(colours, table, sizes):
            good += 1
        i = 0
        while i < n:
            colours[i] += 1
            if colours[i] < k:
                break
            colours[i] = 0
            i += 1
        if i == n:
            return good


def _nb_partition_tally(n, table, sizes):
    tally = np.zeros(n + 1, dtype=np.int64)
    if n == 0:
        tally[0] = 1
        return tally
    a = np.zeros(n, dtype=np.int64)
    top = np.zeros(n, dtype=np.int64)  # top[i] = max(a[0..i])
    while True:
        if not _nb_has_mono(a, table, sizes):
            tally[top[n - 1] + 1] += 1
        i = n - 1
        while i > 0 and a[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return tally
        a[i] += 1
        top[i] = max(top[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            top[j] = top[i]


def _nb_find(parent, v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def _nb_component_tally(n, table, sizes):
    m = table.shape[0]
    tally = np.zeros((n + 1, m + 1), dtype=np.int64)
    parent = np.zeros(n, dtype=np.int64)
    for mask in range(1 << m):
        for v in range(n):
            parent[v] = v
        comps = n
        nedges = 0
        for e in range(m):
            if (mask >> e) & 1:
                nedges += 1
                r0 = _nb_find(parent, table[e, 0])
                for c in range(1, sizes[e]):
                    r = _nb_find(parent, table[e, c])
                    if r != r0:
                        parent[r] = r0
                        comps -= 1
        tally[comps, nedges] += 1
    return tally


def _nb_orientation_counts(n, arcs, has_loop):
    m = arcs.shape[0]
    reach = np.zeros(n, dtype=np.int64)
    acyclic = 0
    cyclic = 0
    for mask in range(1 << m):
        for v in range(n):
            reach[v] = 0
        for e in range(m):
            u = arcs[e, 0]
            w = arcs[e, 1]
            if (mask >> e) & 1:
                u, w = w, u
            reach[u] |= np.int64(1) << w
        for k in range(n):
            kbit = np.int64(1) << k
            for i in range(n):
                if reach[i] & kbit:
                    reach[i] |= reach[k]
        cycle = False
        for v in range(n):
            if (reach[v] >> v) & 1:
                cycle = True
                break
        if not cycle and not has_loop:
            acyclic += 1
        ok = True
        for e in range(m):
            u = arcs[e, 0]
            w = arcs[e, 1]
            if (mask >> e) & 1:
                u, w = w, u
            if not (reach[w] >> u) & 1:
                ok = False
                break
        if ok:
            cyclic += 1
    return acyclic, cyclic


def _nb_independent_tally(n, adj):
    tally = np.zeros(n + 1, dtype=np.int64)
    for s in range(1 << n):
        ok = True
        size = 0
        for v in range(n):
            if (s >> v) & 1:
                size += 1
                if s & adj[v]:
                    ok = False
                    break
        if ok:
            tally[size] += 1
    return tally


if numba is not None:
    _njit = numba.njit(cache=True)
    _nb_has_mono = _njit(_nb_has_mono)
    _nb_find = _njit(_nb_find)
    numba_impl = SimpleNamespace(
        count_colourings=_njit(_nb_count_colourings),
        partition_tally=_njit(_nb_partition_tally),
        component_tally=_njit(_nb_component_tally),
        orientation_counts=_njit(_nb_orientation_counts),
        independent_tally=_njit(_nb_independent_tally),
    )
else:  # pragma: no cover
    numba_impl = None


def active_impl() -> SimpleNamespace:
    if numba_impl is not None and jit_requested():
        return numba_impl
    return numpy_impl


def backend_name() -> str:
    return "numba" if active_impl() is numba_impl else "numpy"


# public dispatchers; the flag is read per call so tests can flip it


def count_colourings(n: int, edges, k: int) -> int:
    """Number of maps ``V -> {0..k-1}`` with no monochromatic edge."""
    table, sizes = edge_table(edges)
    return int(active_impl().count_colourings(n, table, sizes, k))


def partition_tally(n: int, edges) -> list[int]:
    """``tally[k]``: set partitions of ``V`` into ``k`` blocks, none of which
    contains an edge."""
    table, sizes = edge_table(edges)
    return [int(c) for c in active_impl().partition_tally(n, table, sizes)]


def component_tally(n: int, edges) -> list[list[int]]:
    """``tally[c][j]``: edge subsets of size ``j`` whose spanning
    sub-hypergraph has ``c`` components."""
    table, sizes = edge_table(edges)
    return active_impl().component_tally(n, table, sizes).tolist()


def orientation_counts(n: int, arcs, has_loop: bool) -> tuple[int, int]:
    """(acyclic, totally cyclic) over all ``2**len(arcs)`` orientations of the
    non-loop arcs; any loop kills acyclicity and never spoils total cyclicity."""
    a = np.asarray(arcs, dtype=np.int64).reshape(-1, 2)
    acyc, cyc = active_impl().orientation_counts(n, a, bool(has_loop))
    return int(acyc), int(cyc)


def independent_tally(n: int, adj_masks) -> list[int]:
    adj = np.asarray(adj_masks, dtype=np.int64).reshape(n)
    return [int(c) for c in active_impl().independent_tally(n, adj)]

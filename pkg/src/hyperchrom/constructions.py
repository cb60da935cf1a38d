"""Builders for the hypergraph families and the test fixtures.

Also home to the small random samplers and exhaustive generators used by
the property sweeps.
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Mapping
from itertools import combinations, combinations_with_replacement, product

from .hypergraph import Hypergraph, HypergraphError
from .independence import SimpleGraph
from .multigraph import Multigraph

__all__ = [
    "h_apex",
    "h_edge",
    "family_st",
    "attach",
    "complete_hypergraph",
    "theorem3_instance",
    "figure1b",
    "double_edge",
    "FIXTURES",
    "random_hypergraph",
    "random_simple_graph",
    "random_multigraph",
    "all_simple_graphs",
    "all_multigraphs",
]


def h_apex(g: SimpleGraph) -> Hypergraph:
    """Add an apex ``w = n`` and turn every edge ``uv`` into ``{u, v, w}``."""
    w = g.n
    return Hypergraph(g.n + 1, tuple((u, v, w) for u, v in g.edges))


def h_edge(g: Multigraph) -> Hypergraph:
    """Add a private vertex ``w_e = n + i`` to the ``i``-th edge.  A loop at
    ``u`` becomes the 2-edge ``{u, w_e}``."""
    edges = tuple(tuple(sorted({u, v, g.n + i})) for i, (u, v) in enumerate(g.edges))
    return Hypergraph(g.n + g.m, edges)


def family_st(s: int, t: int) -> Hypergraph:
    """``w = 0``, ``x_1..x_s = 1..s``, ``y_1..y_t = s+1..s+t``; edges
    ``{y_1..y_t}`` and ``{w, x_1..x_s, y_j}`` for each ``j``."""
    if s < 1 or t < 1:
        raise ValueError("family_st needs s >= 1 and t >= 1")
    xs = tuple(range(1, s + 1))
    ys = tuple(range(s + 1, s + t + 1))
    return Hypergraph(1 + s + t, (ys,) + tuple((0, *xs, y) for y in ys))


def attach(
    hp: Hypergraph,
    w: int,
    eprime,
    size: int,
    assignment: Mapping[int, set[int] | tuple[int, ...]],
) -> Hypergraph:
    """Add ``size`` new vertices ``n..n+size-1`` and grow each edge ``e`` in
    ``eprime`` (all through ``w``) by the new vertices listed in
    ``assignment[e]`` (given as offsets ``0..size-1``)."""
    if size < 1:
        raise ValueError("need at least one new vertex")
    eprime = set(eprime)
    for i in eprime:
        if not 0 <= i < hp.m:
            raise HypergraphError(f"edge index {i} out of range")
        if w not in hp.edges[i]:
            raise HypergraphError(f"edge {i} does not contain {w}")
    if not set(assignment) <= eprime:
        raise HypergraphError("assignment names edges outside E'")
    covered = set()
    for offs in assignment.values():
        if any(not 0 <= o < size for o in offs):
            raise HypergraphError("assignment offset out of range")
        covered |= set(offs)
    if covered != set(range(size)):
        raise HypergraphError("attachment not connected")
    edges = []
    for i, e in enumerate(hp.edges):
        extra = tuple(hp.n + o for o in assignment.get(i, ()))
        edges.append(e + extra)
    return Hypergraph(hp.n + size, tuple(edges))


def complete_hypergraph(p: int) -> Hypergraph:
    return Hypergraph(p, tuple(combinations(range(p), 2)))


def theorem3_instance() -> Hypergraph:
    return Hypergraph(4, ((0, 1, 2), (0, 1, 3), (0, 1)))


def double_edge() -> Multigraph:
    return Multigraph(2, ((0, 1), (0, 1)))


def figure1b() -> Hypergraph:
    return h_edge(double_edge())


FIXTURES = {
    "figure1b": figure1b,
    "theorem3": theorem3_instance,
    "k3": lambda: complete_hypergraph(3),
    "double-edge": lambda: double_edge().as_hypergraph(),
}


# ---------------------------------------------------------------------------
# samplers and generators


def random_hypergraph(
    rng: random.Random,
    n_range=(3, 6),
    m_range=(2, 7),
    size_range=(2, 4),
    connected: bool = True,
) -> Hypergraph:
    """Uniform ``n``, uniform edge count, each edge a uniform random subset of
    a uniform size; rejection-sampled for connectivity."""
    while True:
        n = rng.randint(*n_range)
        m = rng.randint(*m_range)
        hi = min(size_range[1], n)
        edges = tuple(
            tuple(sorted(rng.sample(range(n), rng.randint(min(size_range[0], hi), hi))))
            for _ in range(m)
        )
        h = Hypergraph(n, edges)
        if not connected or h.is_connected():
            return h


def random_simple_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_multigraph(rng: random.Random, n: int, m: int, loops: bool = True) -> Multigraph:
    edges = []
    for _ in range(m):
        u, v = rng.randrange(n), rng.randrange(n)
        while not loops and u == v and n > 1:
            u, v = rng.randrange(n), rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def all_simple_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield SimpleGraph(n, tuple(p for p, b in zip(pairs, bits) if b))


def all_multigraphs(n: int, m: int) -> Iterator[Multigraph]:
    """Every multiset of ``m`` endpoint pairs (loops included) on ``n``
    vertices.  Edge order never matters to the invariants checked here."""
    slots = [(u, v) for u in range(n) for v in range(u, n)]
    for combo in combinations_with_replacement(slots, m):
        yield Multigraph(n, combo)

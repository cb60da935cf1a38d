"""Exhaustive orientation counts for multigraphs.

A loop can be traversed either way round.  Both directions count as distinct
orientations (so ``2**m`` in total, matching ``T(0, 2) = 2`` for a single
loop), and both close a directed cycle: a loop forbids acyclicity and never
spoils total cyclicity.  An arc lies on a
directed cycle exactly when its head reaches its tail.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from . import _kernels
from .multigraph import Multigraph

__all__ = [
    "Orientation",
    "count_acyclic",
    "count_totally_cyclic",
    "orientation_counts",
    "iter_orientations",
    "ORIENT_LIMIT",
]

ORIENT_LIMIT = 20


@dataclass(frozen=True)
class Orientation:
    """``bits[i]`` set means edge ``i = (u, v)`` (``u <= v``) is directed
    ``v -> u``; for a loop the bit only picks the sense of traversal."""

    graph: Multigraph
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != self.graph.m:
            raise ValueError("one direction bit per edge required")

    def arcs(self) -> list[tuple[int, int]]:
        return [(v, u) if b and u != v else (u, v) for (u, v), b in zip(self.graph.edges, self.bits)]

    def _reach(self) -> list[set[int]]:
        n = self.graph.n
        out = [set() for _ in range(n)]
        for a, b in self.arcs():
            out[a].add(b)
        reach = []
        for s in range(n):
            seen, stack = set(), [s]
            while stack:
                x = stack.pop()
                for y in out[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            reach.append(seen)
        return reach

    def is_acyclic(self) -> bool:
        reach = self._reach()
        return not any(v in reach[v] for v in range(self.graph.n))

    def is_totally_cyclic(self) -> bool:
        reach = self._reach()
        return all(a == b or a in reach[b] for a, b in self.arcs())


def iter_orientations(g: Multigraph) -> Iterator[Orientation]:
    """All ``2**m`` orientations."""
    for mask in range(1 << g.m):
        yield Orientation(g, tuple(bool(mask >> i & 1) for i in range(g.m)))


def orientation_counts(g: Multigraph) -> tuple[int, int]:
    """(acyclic, totally cyclic) orientation counts."""
    if g.m > ORIENT_LIMIT:
        raise ValueError(f"orientation enumeration cutoff: {g.m} edges > {ORIENT_LIMIT}")
    arcs = [(u, v) for u, v in g.edges if u != v]
    loops = g.m - len(arcs)
    acyclic, cyclic = _kernels.orientation_counts(g.n, arcs, loops > 0)
    return acyclic, cyclic << loops


def count_acyclic(g: Multigraph) -> int:
    return orientation_counts(g)[0]


def count_totally_cyclic(g: Multigraph) -> int:
    return orientation_counts(g)[1]

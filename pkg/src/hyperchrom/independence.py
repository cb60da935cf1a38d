"""Independence polynomials of simple graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .multigraph import Multigraph
from .poly import IntPolynomial

__all__ = [
    "SimpleGraph",
    "independence_poly",
    "independence_brute",
    "independence_number",
    "is_clawfree",
    "BRUTE_LIMIT",
]

BRUTE_LIMIT = 25


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless graph without parallel edges on ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u} in a simple graph")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} out of range")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise ValueError(f"parallel edge {e} in a simple graph")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_multigraph(cls, g: Multigraph) -> SimpleGraph:
        return cls(g.n, g.edges)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves: int) -> SimpleGraph:
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def remove(self, drop) -> SimpleGraph:
        """Induced subgraph on the complement of ``drop``, order preserved."""
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        pos = {v: i for i, v in enumerate(keep)}
        return SimpleGraph(
            len(keep), tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        )

    def as_multigraph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)


def independence_poly(g: SimpleGraph, pivot=None) -> IntPolynomial:
    """``I(G, x)`` by the vertex recursion ``I(G) = I(G - v) + x I(G - N[v])``.

    ``pivot`` optionally picks the branching vertex from the live bitmask; the
    default is a maximum-degree vertex.  Memoised on the live vertex set.
    """
    adj = g.adjacency_masks()
    memo: dict[int, list[int]] = {0: [1]}

    def choose(mask: int) -> int:
        best, best_deg = -1, -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adj[v] & mask).count("1")
            if d > best_deg:
                best, best_deg = v, d
        return best

    def rec(mask: int) -> list[int]:
        if mask in memo:
            return memo[mask]
        v = pivot(mask) if pivot is not None else choose(mask)
        without = rec(mask & ~(1 << v))
        closed = rec(mask & ~(1 << v) & ~adj[v])
        out = list(without) + [0] * max(0, len(closed) + 1 - len(without))
        for i, c in enumerate(closed):
            out[i + 1] += c
        memo[mask] = out
        return out

    return IntPolynomial(rec((1 << g.n) - 1))


def independence_brute(g: SimpleGraph) -> IntPolynomial:
    """Same polynomial by enumerating all ``2**n`` vertex subsets."""
    if g.n > BRUTE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_LIMIT}")
    return IntPolynomial(_kernels.independent_tally(g.n, g.adjacency_masks()))


def independence_number(g: SimpleGraph) -> int:
    return independence_poly(g).degree


def is_clawfree(g: SimpleGraph) -> bool:
    """No induced ``K_{1,3}``: checked over every 4-subset."""
    edges = set(g.edges)

    def adj(a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in edges

    for quad in combinations(range(g.n), 4):
        for centre in quad:
            leaves = [v for v in quad if v != centre]
            if all(adj(centre, v) for v in leaves) and not any(
                adj(a, b) for a, b in combinations(leaves, 2)
            ):
                return False
    return True

"""Multigraphs with loops and parallel edges; edges are identified by index."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .hypergraph import Hypergraph, ParseError

__all__ = ["Multigraph", "parse_multigraph", "MultigraphError"]


class MultigraphError(ValueError):
    pass


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        norm = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MultigraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def _check(self, i: int) -> None:
        if not 0 <= i < len(self.edges):
            raise MultigraphError(f"edge index {i} out of range")

    def num_components(self, subset: Iterable[int] | None = None) -> int:
        """``c(A)`` for the spanning subgraph ``(V, A)``; all edges by default."""
        idx = range(len(self.edges)) if subset is None else subset
        parent = list(range(self.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        comps = self.n
        for i in idx:
            a, b = find(self.edges[i][0]), find(self.edges[i][1])
            if a != b:
                parent[b] = a
                comps -= 1
        return comps

    def rank(self, subset: Iterable[int] | None = None) -> int:
        return self.n - self.num_components(subset)

    def is_loop(self, i: int) -> bool:
        self._check(i)
        u, v = self.edges[i]
        return u == v

    def is_bridge(self, i: int) -> bool:
        self._check(i)
        return self.delete(i).num_components() > self.num_components()

    def delete(self, i: int) -> Multigraph:
        self._check(i)
        return Multigraph(self.n, self.edges[:i] + self.edges[i + 1 :])

    def contract(self, i: int) -> Multigraph:
        """Remove edge ``i`` and merge its ends into the smaller one's slot;
        contracting a loop just deletes it."""
        self._check(i)
        u, v = self.edges[i]
        rest = self.edges[:i] + self.edges[i + 1 :]
        if u == v:
            return Multigraph(self.n, rest)

        def image(x: int) -> int:
            if x == v:
                x = u
            return x - 1 if x > v else x

        return Multigraph(self.n - 1, tuple((image(a), image(b)) for a, b in rest))

    def as_hypergraph(self) -> Hypergraph:
        """Each edge becomes its endpoint set; a loop becomes a size-1 edge."""
        return Hypergraph(self.n, tuple(tuple(sorted({u, v})) for u, v in self.edges))

    def to_text(self) -> str:
        lines = [f"p mg {self.n} {len(self.edges)}"]
        lines += [f"a {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> Multigraph:
    """Parse ``p mg <n> <m>`` followed by ``a u v`` lines (``c`` = comment)."""
    header = None
    edges: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if header is None:
            if tokens[:2] != ["p", "mg"] or len(tokens) != 4:
                raise ParseError("expected header 'p mg <n> <m>'", lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise ParseError("non-integer vertex or edge count", lineno, raw.index(tokens[2]) + 1)
            continue
        if tokens[0] != "a" or len(tokens) != 3:
            raise ParseError("expected 'a <u> <v>'", lineno, raw.index(tokens[0]) + 1)
        ends = []
        for pos, tok in enumerate(tokens[1:], start=1):
            col = raw.index(tok, raw.index(tokens[pos - 1]) + len(tokens[pos - 1])) + 1
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex id {tok!r}", lineno, col)
            if not 0 <= v < header[0]:
                raise ParseError(f"vertex {v} out of range 0..{header[0] - 1}", lineno, col)
            ends.append(v)
        edges.append((ends[0], ends[1]))
    if header is None:
        raise ParseError("missing 'p mg' header", max(lineno, 1))
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}", lineno)
    return Multigraph(header[0], tuple(edges))

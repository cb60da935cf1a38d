"""Hypergraph data model and the structural operations used by the recurrences."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

__all__ = ["Hypergraph", "HypergraphError", "ParseError", "parse_hypergraph"]

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _renumber(n: int, drop: set[int], merged: set[int] | None = None) -> tuple[list[int], int]:
    """Old-to-new vertex map.  Vertices in ``drop`` map to -1; vertices in
    ``merged`` all map to the slot of the smallest of them.  Survivors keep
    their relative order."""
    rep = min(merged) if merged else None
    mapping = [-1] * n
    nxt = 0
    for v in range(n):
        if v in drop:
            continue
        if merged and v in merged and v != rep:
            continue
        mapping[v] = nxt
        nxt += 1
    if merged:
        for v in merged:
            mapping[v] = mapping[rep]
    return mapping, nxt


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..n-1`` and an ordered multiset of nonempty edges, each a
    strictly increasing vertex tuple."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError("vertex count must be nonnegative")
        norm = []
        for e in self.edges:
            t = tuple(sorted(set(int(v) for v in e)))
            if not t:
                raise HypergraphError("edges must be nonempty")
            if t[0] < 0 or t[-1] >= self.n:
                raise HypergraphError(f"edge {t} has a vertex outside 0..{self.n - 1}")
            norm.append(t)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __str__(self) -> str:
        return f"H(n={self.n}, E={[set(e) for e in self.edges]})"

    # connectivity

    def components(self) -> list[Edge]:
        """Vertex partition into connected parts (isolated vertices are
        singletons), ordered by smallest member."""
        parent = list(range(self.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            r0 = find(e[0])
            for v in e[1:]:
                r = find(v)
                if r != r0:
                    parent[r] = r0
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])

    def num_components(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.num_components() <= 1

    # edge edits

    def delete_edge(self, index: int) -> Hypergraph:
        self._check_index(index)
        return Hypergraph(self.n, self.edges[:index] + self.edges[index + 1 :])

    def add_edge(self, e: Iterable[int]) -> Hypergraph:
        return Hypergraph(self.n, self.edges + (tuple(e),))

    def _check_index(self, index: int) -> None:
        if not 0 <= index < len(self.edges):
            raise HypergraphError(f"edge index {index} out of range")

    def identify(self, v0: Iterable[int]) -> Hypergraph:
        """``H·V0``: merge ``v0`` into one vertex.  Edges meeting ``v0`` become
        ``(e - v0) ∪ {w}``; parallel copies are collapsed."""
        group = set(v0)
        if not group:
            raise HypergraphError("cannot identify an empty vertex set")
        if any(not 0 <= v < self.n for v in group):
            raise HypergraphError("identified set has out-of-range vertices")
        mapping, n_new = _renumber(self.n, set(), group)
        seen, edges = set(), []
        for e in self.edges:
            img = tuple(sorted({mapping[v] for v in e}))
            if img not in seen:
                seen.add(img)
                edges.append(img)
        return Hypergraph(n_new, tuple(edges))

    def contract_edge(self, index: int) -> Hypergraph:
        """``H/e = (H - e)·e``."""
        self._check_index(index)
        return self.delete_edge(index).identify(self.edges[index])

    # induced pieces

    def induced(self, v0: Iterable[int]) -> Hypergraph:
        """``H[V0]`` on vertices renumbered in their original order."""
        keep = set(v0)
        mapping, n_new = _renumber(self.n, set(range(self.n)) - keep)
        edges = tuple(tuple(mapping[v] for v in e) for e in self.edges if keep.issuperset(e))
        return Hypergraph(n_new, edges)

    def remove(self, v0: Iterable[int]) -> Hypergraph:
        """``H - V0 = H[V - V0]``."""
        drop = set(v0)
        return self.induced(v for v in range(self.n) if v not in drop)

    def delete_vertex_closed(self, w: int) -> Hypergraph:
        """Drop ``w`` together with every edge through it."""
        return self.remove((w,))

    def plus_k1(self) -> Hypergraph:
        """``H + K1``: a new vertex joined by a 2-edge to every old vertex."""
        return Hypergraph(self.n + 1, self.edges + tuple((v, self.n) for v in range(self.n)))

    def disjoint_union(self, other: Hypergraph) -> Hypergraph:
        shifted = tuple(tuple(v + self.n for v in e) for e in other.edges)
        return Hypergraph(self.n + other.n, self.edges + shifted)

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Vertex ``v`` becomes ``perm[v]``."""
        return Hypergraph(self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))

    # structure

    def bridges(self) -> list[int]:
        base = self.num_components()
        return [i for i in range(len(self.edges)) if self.delete_edge(i).num_components() > base]

    def common_vertices(self) -> Edge:
        """``F(H)``: vertices lying in every edge."""
        if not self.edges:
            raise HypergraphError("F undefined on empty edge set")
        common = set(self.edges[0])
        for e in self.edges[1:]:
            common &= set(e)
        return tuple(sorted(common))

    def is_sperner(self) -> bool:
        sets = [frozenset(e) for e in self.edges]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    return False
        return True

    def sperner_reduce(self) -> Hypergraph:
        """Drop every edge that contains another edge (exact duplicates keep
        their first copy).  Never changes the chromatic polynomial."""
        sets = [frozenset(e) for e in self.edges]
        keep = []
        for i, e in enumerate(sets):
            dominated = False
            for j, f in enumerate(sets):
                if i == j:
                    continue
                if f < e or (f == e and j < i):
                    dominated = True
                    break
            if not dominated:
                keep.append(self.edges[i])
        return Hypergraph(self.n, tuple(keep))

    def is_independent(self, v0: Iterable[int]) -> bool:
        """``V0 ∈ I(H)``: no edge lies inside ``V0``."""
        s = set(v0)
        return not any(s.issuperset(e) for e in self.edges)

    def independent_sets_containing(self, w: int) -> Iterator[Edge]:
        """Every ``V0 ∈ I(H)`` with ``w ∈ V0``, in lexicographic order."""
        if not 0 <= w < self.n:
            raise HypergraphError(f"vertex {w} out of range")
        others = [v for v in range(self.n) if v != w]
        found = []
        for r in range(len(others) + 1):
            for extra in combinations(others, r):
                cand = tuple(sorted((w, *extra)))
                if self.is_independent(cand):
                    found.append(cand)
        yield from sorted(found)

    def separations(self, w: int) -> list[tuple[Edge, Edge]]:
        """All splits ``(V1, V2)`` with ``V1 ∩ V2 = {w}`` that group the parts
        of ``H - w`` into two nonempty sides.  Empty when ``H`` is not
        separable at ``w``."""
        if not self.is_connected():
            raise HypergraphError("separations need a connected hypergraph")
        if not 0 <= w < self.n:
            raise HypergraphError(f"vertex {w} out of range")
        rest = [v for v in range(self.n) if v != w]
        parts = [tuple(rest[i] for i in comp) for comp in self.delete_vertex_closed(w).components()]
        k = len(parts)
        out = []
        # part 0 always on the first side, so each unordered split appears once
        for mask in range(1, 1 << (k - 1)) if k >= 2 else ():
            side1, side2 = [w], [w]
            for i, part in enumerate(parts):
                if i > 0 and mask >> (i - 1) & 1:
                    side2.extend(part)
                else:
                    side1.extend(part)
            out.append((tuple(sorted(side1)), tuple(sorted(side2))))
        return out

    def is_separation(self, w: int, v1: Iterable[int], v2: Iterable[int]) -> bool:
        s1, s2 = set(v1), set(v2)
        if s1 | s2 != set(range(self.n)) or s1 & s2 != {w}:
            return False
        if len(s1) == self.n or len(s2) == self.n:
            return False
        return all(w in e or s1.issuperset(e) or s2.issuperset(e) for e in self.edges)

    # text format

    def to_text(self) -> str:
        lines = [f"p hg {self.n} {len(self.edges)}"]
        lines += ["e " + " ".join(map(str, e)) for e in self.edges]
        return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse ``p hg <n> <m>`` followed by ``e v1 v2 ...`` lines; ``c`` lines
    are comments."""
    header = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if header is None:
            if tokens[:2] != ["p", "hg"] or len(tokens) != 4:
                raise ParseError("expected header 'p hg <n> <m>'", lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise ParseError("non-integer vertex or edge count", lineno, raw.index(tokens[2]) + 1)
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if tokens[0] != "e":
            raise ParseError(f"unexpected token {tokens[0]!r}", lineno, raw.index(tokens[0]) + 1)
        if len(tokens) == 1:
            raise ParseError("empty edge", lineno, len(raw) + 1)
        verts = []
        col = raw.index(tokens[0]) + 1
        for tok in tokens[1:]:
            col = raw.index(tok, col) + 1
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex id {tok!r}", lineno, col)
            if not 0 <= v < header[0]:
                raise ParseError(f"vertex {v} out of range 0..{header[0] - 1}", lineno, col)
            verts.append(v)
            col += len(tok) - 1
        edges.append(tuple(verts))
    if header is None:
        raise ParseError("missing 'p hg' header", 1)
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}", lineno)
    return Hypergraph(header[0], tuple(edges))

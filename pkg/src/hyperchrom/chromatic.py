"""Chromatic polynomials of hypergraphs (weak proper colourings).

``chrom_poly`` is the production path (deletion–contraction with reductions
and a memo).  ``chrom_interpolate``, ``chrom_partition`` and
``whitney_coeffs`` are independent oracles; ``chrom_level`` is the level
recursion through a fixed vertex.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import _kernels
from .hypergraph import Hypergraph, HypergraphError
from .poly import IntPolynomial, LAMBDA, PolynomialError, falling_factorial

__all__ = [
    "chrom_poly",
    "chrom_count",
    "chrom_interpolate",
    "chrom_partition",
    "chrom_level",
    "whitney_coeffs",
    "clique_cut_factor",
    "CliqueCutError",
    "COUNT_LIMIT",
    "INTERPOLATE_LIMIT",
    "PARTITION_LIMIT",
    "WHITNEY_LIMIT",
]

COUNT_LIMIT = 8
INTERPOLATE_LIMIT = 7
PARTITION_LIMIT = 10
WHITNEY_LIMIT = 20
_MAX_ASSIGNMENTS = 10**8

Edges = tuple[tuple[int, ...], ...]


class CliqueCutError(ValueError):
    pass


def _lam_pow(k: int) -> IntPolynomial:
    return IntPolynomial.monomial(k)


def _sperner(edges: Edges) -> Edges:
    sets = sorted(set(frozenset(e) for e in edges), key=len)
    kept: list[frozenset] = []
    for e in sets:
        if not any(f <= e for f in kept):
            kept.append(e)
    return tuple(tuple(sorted(e)) for e in kept)


def _compact(vertices, edges: Edges) -> tuple[int, Edges]:
    pos = {v: i for i, v in enumerate(sorted(vertices))}
    return len(pos), tuple(tuple(pos[v] for v in e) for e in edges)


def _canonical(n: int, edges: Edges) -> tuple[int, Edges]:
    """Relabel by first appearance in the sorted edge list; not an
    isomorphism invariant, only a cheap normal form for the memo."""
    order: dict[int, int] = {}
    for e in sorted(edges):
        for v in e:
            if v not in order:
                order[v] = len(order)
    return n, tuple(sorted(tuple(sorted(order[v] for v in e)) for e in edges))


def _parts(vertices, edges, skip=None) -> list[list[int]]:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        live = [v for v in e if v != skip]
        r0 = find(live[0])
        for v in live[1:]:
            r = find(v)
            if r != r0:
                parent[r] = r0
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _solve(n: int, edges: Edges) -> IntPolynomial:
    if any(len(e) == 1 for e in edges):
        return IntPolynomial()
    edges = _sperner(edges)
    if not edges:
        return _lam_pow(n)
    covered = {v for e in edges for v in e}
    factor = _lam_pow(n - len(covered))
    parts = _parts(sorted(covered), edges)
    if len(parts) > 1:
        result = factor
        for part in parts:
            ps = set(part)
            result = result * _solve(*_compact(part, tuple(e for e in edges if ps.issuperset(e))))
        return result
    n_c, e_c = _compact(covered, edges)
    return factor * _connected(*_canonical(n_c, e_c))


@lru_cache(maxsize=1 << 16)
def _connected(n: int, edges: Edges) -> IntPolynomial:
    # connected, Sperner, no isolated vertices, every edge of size >= 2
    for w in range(n):
        sides = _parts([v for v in range(n) if v != w], edges, skip=w)
        if len(sides) > 1:
            result = IntPolynomial([1])
            for side in sides:
                keep = set(side) | {w}
                result = result * _solve(*_compact(keep, tuple(e for e in edges if keep.issuperset(e))))
            return result.exact_div(_lam_pow(len(sides) - 1))
    pivot = min(range(len(edges)), key=lambda i: (len(edges[i]), i))
    e = edges[pivot]
    rest = edges[:pivot] + edges[pivot + 1 :]
    deleted = _solve(n, rest)
    h = Hypergraph(n, rest).identify(e)
    return deleted - _solve(h.n, h.edges)


def chrom_poly(h: Hypergraph) -> IntPolynomial:
    """``P(H, λ)`` by deletion–contraction, ``P(H) = P(H - e) - P(H/e)``.

    Every node first short-circuits size-1 edges to zero, then applies the
    Sperner reduction, splits off components and cut vertices, and finally
    branches on a smallest edge.
    """
    return _solve(h.n, h.edges)


def chrom_count(h: Hypergraph, k: int) -> int:
    """Weak proper ``k``-colourings by direct enumeration of all ``k**n`` maps."""
    if h.n > COUNT_LIMIT:
        raise ValueError(f"enumeration limited to n <= {COUNT_LIMIT}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k**h.n > _MAX_ASSIGNMENTS:
        raise ValueError(f"{k}**{h.n} colourings is too many to enumerate")
    return _kernels.count_colourings(h.n, h.edges, k)


def chrom_interpolate(h: Hypergraph) -> IntPolynomial:
    """Lagrange interpolation through the exact counts at ``k = 0..n``."""
    if h.n > INTERPOLATE_LIMIT:
        raise ValueError(f"interpolation limited to n <= {INTERPOLATE_LIMIT}")
    nodes = list(range(h.n + 1))
    values = [chrom_count(h, k) for k in nodes]
    coeffs = [Fraction(0)] * len(nodes)
    for i, xi in enumerate(nodes):
        if not values[i]:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d, b in enumerate(basis):
            coeffs[d] += values[i] * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"interpolated coefficients are not integers: {coeffs}")
    return IntPolynomial(int(c) for c in coeffs)


def chrom_partition(h: Hypergraph) -> IntPolynomial:
    """Sum of ``(λ)_k`` over partitions of ``V`` into ``k`` independent blocks."""
    if h.n > PARTITION_LIMIT:
        raise ValueError(f"partition enumeration limited to n <= {PARTITION_LIMIT}")
    total = IntPolynomial()
    for k, count in enumerate(_kernels.partition_tally(h.n, h.edges)):
        if count:
            total = total + falling_factorial(k) * count
    return total


def chrom_level(h: Hypergraph, w: int) -> IntPolynomial:
    """``λ * sum over independent V0 ∋ w of P(H - V0, λ - 1)``."""
    if not 0 <= w < h.n:
        raise HypergraphError(f"vertex {w} out of range")
    total = IntPolynomial()
    for v0 in h.independent_sets_containing(w):
        total = total + chrom_poly(h.remove(v0)).shift(-1)
    return LAMBDA * total


def whitney_coeffs(h: Hypergraph) -> IntPolynomial:
    """``a_i = sum_j (-1)**j N(i, j)`` with ``N(i, j)`` the number of spanning
    sub-hypergraphs with ``i`` components and ``j`` edges."""
    if h.m > WHITNEY_LIMIT:
        raise ValueError(f"subset enumeration limited to |E| <= {WHITNEY_LIMIT}")
    tally = _kernels.component_tally(h.n, h.edges)
    coeffs = [sum((-1) ** j * c for j, c in enumerate(row)) for row in tally]
    return IntPolynomial(coeffs)


def clique_cut_factor(h: Hypergraph, h1, h2, p: int) -> IntPolynomial:
    """``P(H[H1]) P(H[H2]) / (λ)_p`` for a split whose overlap is a clique of
    2-edges and which every edge respects."""
    s1, s2 = set(h1), set(h2)
    overlap = s1 & s2
    if s1 | s2 != set(range(h.n)):
        raise CliqueCutError("not a clique cut: sides do not cover V")
    if len(overlap) != p:
        raise CliqueCutError(f"not a clique cut: overlap has {len(overlap)} vertices, not {p}")
    if not all(s1.issuperset(e) or s2.issuperset(e) for e in h.edges):
        raise CliqueCutError("not a clique cut: an edge straddles the sides")
    edge_sets = {frozenset(e) for e in h.edges}
    if p >= 2 and not all(frozenset(pair) in edge_sets for pair in combinations(overlap, 2)):
        raise CliqueCutError("not a clique cut: overlap is not a clique")
    num = chrom_poly(h.induced(s1)) * chrom_poly(h.induced(s2))
    try:
        return num.exact_div(falling_factorial(p))
    except PolynomialError as exc:
        raise ArithmeticError(f"clique-cut division is not exact: {exc}") from exc

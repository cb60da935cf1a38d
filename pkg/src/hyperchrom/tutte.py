"""Tutte polynomials of multigraphs: subset expansion and deletion–contraction."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import _kernels
from .multigraph import Multigraph
from .poly import BivarLaurent, Number

__all__ = ["tutte_subset", "tutte_dc", "tutte_eval", "SUBSET_LIMIT"]

SUBSET_LIMIT = 20

_X = BivarLaurent.x()
_Y = BivarLaurent.y()


def tutte_subset(g: Multigraph) -> BivarLaurent:
    """Sum over all edge subsets ``A`` of
    ``(x-1)**(r(E)-r(A)) * (y-1)**(|A|-r(A))``."""
    if g.m > SUBSET_LIMIT:
        raise ValueError(f"subset expansion cutoff: {g.m} edges > {SUBSET_LIMIT}")
    tally = _kernels.component_tally(g.n, [tuple(sorted({u, v})) for u, v in g.edges])
    full_rank = g.rank()
    xm1, ym1 = _X - 1, _Y - 1
    total = BivarLaurent()
    for comps, row in enumerate(tally):
        r = g.n - comps
        for size, count in enumerate(row):
            if count:
                total = total + (xm1 ** (full_rank - r)) * (ym1 ** (size - r)) * count
    return total


def _pick_edge(g: Multigraph) -> tuple[int, str]:
    for i in range(g.m):
        if g.is_loop(i):
            return i, "loop"
    for i in range(g.m):
        if g.is_bridge(i):
            return i, "bridge"
    return 0, "ordinary"


@lru_cache(maxsize=1 << 14)
def _tutte_dc(g: Multigraph) -> BivarLaurent:
    if g.m == 0:
        return BivarLaurent.constant(1)
    i, kind = _pick_edge(g)
    if kind == "loop":
        return _Y * _tutte_dc(g.delete(i))
    if kind == "bridge":
        return _X * _tutte_dc(g.contract(i))
    return _tutte_dc(g.delete(i)) + _tutte_dc(g.contract(i))


def tutte_dc(g: Multigraph) -> BivarLaurent:
    """Deletion–contraction: loops first, then bridges, then the lowest index."""
    return _tutte_dc(g)


def tutte_eval(t: BivarLaurent, x: Number, y: Number) -> Fraction:
    return t(x, y)

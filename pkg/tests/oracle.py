"""Package-independent reference computations used to pin expected values.

Plain itertools brute force plus sympy interpolation; nothing here imports
hyperchrom.
"""

from __future__ import annotations

from itertools import combinations, product

import sympy

LAM = sympy.Symbol("lam")


def count(n, edges, k):
    total = 0
    for col in product(range(k), repeat=n):
        if all(len({col[v] for v in e}) > 1 for e in edges):
            total += 1
    return total


def chrom(n, edges):
    """Ascending integer coefficients of P(H, λ) via interpolation at 0..n."""
    pts = [(k, count(n, edges, k)) for k in range(n + 1)]
    poly = sympy.Poly(sympy.interpolate(pts, LAM), LAM) if n else sympy.Poly(1, LAM)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def from_expr(expr):
    coeffs = [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), LAM).all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def independence(n, edges):
    adj = {frozenset(e) for e in edges}
    out = [0] * (n + 1)
    for r in range(n + 1):
        for s in combinations(range(n), r):
            if not any(frozenset(p) in adj for p in combinations(s, 2)):
                out[r] += 1
    while out and out[-1] == 0:
        out.pop()
    return out


def _reach(n, arcs):
    reach = [[False] * n for _ in range(n)]
    for a, b in arcs:
        reach[a][b] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def orientations(n, edges):
    """(acyclic, totally cyclic); a loop has two senses, both cyclic."""
    acyc = cyc = 0
    for bits in product((0, 1), repeat=len(edges)):
        arcs = [(v, u) if b else (u, v) for (u, v), b in zip(edges, bits)]
        reach = _reach(n, arcs)
        if not any(reach[v][v] for v in range(n)):
            acyc += 1
        if all(reach[b][a] for a, b in arcs):
            cyc += 1
    return acyc, cyc


def tutte(n, edges):
    """Ascending dict {(i, j): c} of T_G(x, y) by subset expansion."""
    x, y = sympy.symbols("x y")

    def comps(sub):
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        for u, v in sub:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return len({find(v) for v in range(n)})

    rank_e = n - comps(edges)
    total = 0
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            ra = n - comps(sub)
            total += (x - 1) ** (rank_e - ra) * (y - 1) ** (len(sub) - ra)
    poly = sympy.Poly(sympy.expand(total), x, y)
    return {m: int(c) for m, c in poly.terms() if c}

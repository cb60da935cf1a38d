import random

import pytest

from hyperchrom.chromatic import chrom_poly
from hyperchrom.constructions import (
    FIXTURES,
    attach,
    complete_hypergraph,
    double_edge,
    family_st,
    figure1b,
    h_apex,
    h_edge,
    random_multigraph,
    random_simple_graph,
    theorem3_instance,
)
from hyperchrom.hypergraph import Hypergraph, HypergraphError
from hyperchrom.independence import SimpleGraph
from hyperchrom.multigraph import Multigraph
from hyperchrom.poly import IntPolynomial, falling_factorial


def test_h_apex_examples():
    assert h_apex(SimpleGraph.complete(2)) == Hypergraph(3, ((0, 1, 2),))
    one = h_apex(SimpleGraph(1, ()))
    assert one == Hypergraph(2, ())
    assert chrom_poly(one) == IntPolynomial([0, 0, 1])
    assert h_apex(SimpleGraph.complete(3)).edges == ((0, 1, 3), (0, 2, 3), (1, 2, 3))


def test_h_edge_examples():
    assert h_edge(double_edge()) == Hypergraph(4, ((0, 1, 2), (0, 1, 3)))
    assert h_edge(Multigraph(2, ((0, 1),))) == Hypergraph(3, ((0, 1, 2),))
    loop = h_edge(Multigraph(1, ((0, 0),)))
    assert loop == Hypergraph(2, ((0, 1),))
    assert chrom_poly(loop) == IntPolynomial([0, -1, 1])


def test_family_st_examples():
    assert family_st(1, 2) == Hypergraph(4, ((2, 3), (0, 1, 2), (0, 1, 3)))
    f11 = family_st(1, 1)
    assert (2,) in f11.edges and chrom_poly(f11).is_zero()
    f22 = family_st(2, 2)
    assert f22.n == 5 and [len(e) for e in f22.edges] == [2, 4, 4]
    with pytest.raises(ValueError):
        family_st(0, 2)


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("t", [2, 3, 4])
def test_family_st_shape(s, t):
    h = family_st(s, t)
    assert h.is_connected() and h.is_sperner()
    # each x_i is its own part once w is gone, so the x-side grouping is one of several
    assert (tuple(range(s + 1)), (0, *range(s + 1, s + t + 1))) in h.separations(0)
    assert h.is_separation(0, range(s + 1), (0, *range(s + 1, s + t + 1)))


def test_attach_examples():
    core = Hypergraph(3, ((0, 1), (0, 2), (1, 2)))
    grown = attach(core, 0, {0}, 1, {0: {0}})
    assert grown.edges[0] == (0, 1, 3) and grown.edges[1:] == core.edges[1:]
    # family_st(1,2) relabelled: core on {w, y1, y2}, x1 attached to both w-edges
    core = Hypergraph(3, ((1, 2), (0, 1), (0, 2)))
    grown = attach(core, 0, {1, 2}, 1, {1: {0}, 2: {0}})
    assert grown == family_st(1, 2).relabel([0, 3, 1, 2])
    with pytest.raises(HypergraphError, match="attachment not connected"):
        attach(core, 0, {1}, 2, {1: {0}})
    with pytest.raises(HypergraphError):
        attach(core, 0, {0}, 1, {0: {0}})


def test_fixtures():
    assert chrom_poly(complete_hypergraph(3)) == falling_factorial(3)
    t3 = theorem3_instance()
    assert t3.bridges() == [0, 1] and not t3.is_sperner()
    assert chrom_poly(figure1b()) == IntPolynomial([0, 1, -2, 0, 1])
    assert set(FIXTURES) == {"figure1b", "theorem3", "k3", "double-edge"}


def test_construction_invariants():
    rng = random.Random(2)
    for _ in range(100):
        g = random_simple_graph(rng, rng.randint(1, 6))
        h = h_apex(g)
        assert h.m == len(g.edges) and all(g.n in e for e in h.edges)
    for _ in range(100):
        g = random_multigraph(rng, rng.randint(1, 5), rng.randint(1, 6))
        h = h_edge(g)
        for i in range(g.m):
            assert sum(g.n + i in e for e in h.edges) == 1
        pairs = [(a, b) for a in g.edges for b in g.edges if not set(a) & set(b)]
        if pairs:
            assert h.common_vertices() == ()

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperchrom.chromatic import chrom_poly
from hyperchrom.constructions import family_st, figure1b, random_hypergraph, theorem3_instance
from hyperchrom.hypergraph import Hypergraph, HypergraphError, ParseError, parse_hypergraph

TRIPLE = Hypergraph(3, ((0, 1, 2),))


@st.composite
def hypergraphs(draw, max_n=6, max_m=6, min_size=1):
    n = draw(st.integers(1, max_n))
    edges = draw(
        st.lists(
            st.sets(st.integers(0, n - 1), min_size=min(min_size, n), max_size=n).map(sorted).map(tuple),
            max_size=max_m,
        )
    )
    return Hypergraph(n, tuple(edges))


def test_edges_are_normalized():
    h = Hypergraph(3, ((2, 0, 0),))
    assert h.edges == ((0, 2),)
    with pytest.raises(HypergraphError):
        Hypergraph(2, ((0, 2),))
    with pytest.raises(HypergraphError):
        Hypergraph(2, ((),))


def test_components_examples():
    assert TRIPLE.components() == [(0, 1, 2)]
    assert Hypergraph(4, ((0, 1),)).components() == [(0, 1), (2,), (3,)]
    assert len(figure1b().components()) == 1
    assert len(figure1b().components()[0]) == 4


def test_delete_and_add_edge():
    assert TRIPLE.delete_edge(0) == Hypergraph(3, ())
    assert Hypergraph(2, ()).add_edge((0, 1)).edges == ((0, 1),)
    with pytest.raises(HypergraphError):
        TRIPLE.delete_edge(1)
    with pytest.raises(HypergraphError):
        TRIPLE.add_edge(())


def test_identify_examples():
    assert TRIPLE.identify({0, 1}) == Hypergraph(2, ((0, 1),))
    assert TRIPLE.identify({0, 1, 2}) == Hypergraph(1, ((0,),))
    # family_st(1,2) with V1 = {w, x1}: edges {y1,y2}, {w,y1}, {w,y2}
    assert family_st(1, 2).identify({0, 1}) == Hypergraph(3, ((1, 2), (0, 1), (0, 2)))
    with pytest.raises(HypergraphError):
        TRIPLE.identify(())


def test_identify_collapses_parallel_images():
    h = Hypergraph(4, ((0, 2), (1, 2), (2, 3)))
    assert h.identify({0, 1}).edges == ((0, 1), (1, 2))


def test_contract_examples():
    assert TRIPLE.contract_edge(0) == Hypergraph(1, ())
    assert Hypergraph(3, ((0, 1), (1, 2))).contract_edge(0) == Hypergraph(2, ((0, 1),))
    # the other triple maps to {w, w_e2}: n - |e| + 1 = 2 vertices
    assert figure1b().contract_edge(0) == Hypergraph(2, ((0, 1),))


@given(hypergraphs(), st.data())
def test_identify_vertex_count(h, data):
    v0 = data.draw(st.sets(st.integers(0, h.n - 1), min_size=1))
    assert h.identify(v0).n == h.n - len(v0) + 1


@given(hypergraphs(), st.data())
def test_contract_is_delete_then_identify(h, data):
    if not h.m:
        return
    i = data.draw(st.integers(0, h.m - 1))
    assert h.contract_edge(i) == h.delete_edge(i).identify(h.edges[i])


def test_sub_ops_examples():
    assert TRIPLE.induced({0, 1}) == Hypergraph(2, ())
    rest = family_st(1, 2).delete_vertex_closed(0)
    assert not rest.is_connected()
    assert rest.components() == [(0,), (1, 2)]
    assert Hypergraph(1, ()).plus_k1() == Hypergraph(2, ((0, 1),))


@given(hypergraphs())
def test_plus_k1_shape(h):
    g = h.plus_k1()
    assert g.n == h.n + 1 and g.m == h.m + h.n


def test_bridges_examples():
    assert Hypergraph(3, ((0, 1), (1, 2))).bridges() == [0, 1]
    assert theorem3_instance().bridges() == [0, 1]
    # deleting the spanning edge strands vertex 2, so it is a bridge; {0,1} is not
    assert Hypergraph(3, ((0, 1, 2), (0, 1))).bridges() == [0]
    assert Hypergraph(3, ((0, 1, 2), (0, 1), (1, 2))).bridges() == []


@given(hypergraphs())
def test_bridges_match_definition(h):
    c = h.num_components()
    for i in range(h.m):
        assert (h.delete_edge(i).num_components() > c) == (i in h.bridges())


def test_common_vertices_examples():
    assert Hypergraph(3, ((0, 1), (0, 2))).common_vertices() == (0,)
    assert figure1b().common_vertices() == (0, 1)
    assert family_st(1, 2).common_vertices() == ()
    with pytest.raises(HypergraphError, match="F undefined on empty edge set"):
        Hypergraph(2, ()).common_vertices()


def test_sperner_reduce_examples():
    assert Hypergraph(3, ((0, 1), (0, 1, 2))).sperner_reduce().edges == ((0, 1),)
    assert Hypergraph(2, ((0, 1), (0, 1))).sperner_reduce().edges == ((0, 1),)
    fs = family_st(2, 3)
    assert fs.is_sperner() and fs.sperner_reduce() == fs


@given(hypergraphs())
def test_sperner_reduce_idempotent(h):
    r = h.sperner_reduce()
    assert r.is_sperner()
    assert r.sperner_reduce() == r


def test_sperner_reduce_keeps_polynomial():
    rng = random.Random(11)
    for _ in range(200):
        h = random_hypergraph(rng, connected=False)
        assert chrom_poly(h) == chrom_poly(h.sperner_reduce())


def test_independent_sets_examples():
    assert list(Hypergraph(2, ((0, 1),)).independent_sets_containing(0)) == [(0,)]
    assert list(TRIPLE.independent_sets_containing(0)) == [(0,), (0, 1), (0, 2)]
    assert list(Hypergraph(2, ()).independent_sets_containing(0)) == [(0,), (0, 1)]


@given(hypergraphs(), st.data())
def test_independent_sets_are_independent(h, data):
    w = data.draw(st.integers(0, h.n - 1))
    found = list(h.independent_sets_containing(w))
    assert found == sorted(found)
    for v0 in found:
        assert w in v0
        assert not any(set(e) <= set(v0) for e in h.edges)


def test_separations_examples():
    assert family_st(1, 2).separations(0) == [((0, 1), (0, 2, 3))]
    tri = Hypergraph(3, ((0, 1), (1, 2), (0, 2)))
    assert all(tri.separations(w) == [] for w in range(3))
    star = Hypergraph(4, ((0, 1), (0, 2), (0, 3)))
    seps = star.separations(0)
    assert len(seps) == 3
    assert all(star.is_separation(0, a, b) for a, b in seps)
    with pytest.raises(HypergraphError):
        Hypergraph(3, ((0, 1),)).separations(0)


def test_text_roundtrip():
    h = figure1b()
    assert parse_hypergraph(h.to_text()) == h
    assert parse_hypergraph("c comment\np hg 3 1\n\ne 0 1 2\n") == TRIPLE


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("p hg 3 1\ne 0 5\n", 2, 5),
        ("p hg 3 1\ne\n", 2, 2),
        ("p hg 3 1\nx 0 1\n", 2, 1),
        ("p hg 3 1\ne 0 q\n", 2, 5),
        ("p mg 3 1\n", 1, 1),
        ("p hg 3 2\ne 0 1\n", 2, 1),
        ("", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(text)
    assert (info.value.line, info.value.column) == (line, column)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperchrom.hypergraph import ParseError
from hyperchrom.multigraph import Multigraph, MultigraphError, parse_multigraph

TRIANGLE = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
DOUBLE = Multigraph(2, ((0, 1), (0, 1)))


@st.composite
def multigraphs(draw, max_n=5, max_m=7):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    return Multigraph(n, tuple(edges))


def test_triangle_edges_plain():
    assert not any(TRIANGLE.is_loop(i) or TRIANGLE.is_bridge(i) for i in range(3))


def test_loop_rank():
    g = Multigraph(1, ((0, 0),))
    assert g.is_loop(0)
    assert g.rank() == 0


def test_double_edge():
    assert DOUBLE.rank() == 1
    assert not DOUBLE.is_bridge(0) and not DOUBLE.is_bridge(1)


def test_bad_index_and_endpoint():
    with pytest.raises(MultigraphError):
        DOUBLE.delete(2)
    with pytest.raises(MultigraphError):
        Multigraph(2, ((0, 2),))


@given(multigraphs())
def test_rank_laws(g):
    assert g.rank(()) == 0
    assert g.rank() == g.n - g.num_components()
    prev = 0
    for k in range(g.m + 1):
        r = g.rank(range(k))
        assert r >= prev
        prev = r


@given(multigraphs(), st.data())
def test_contract_vertex_count(g, data):
    if not g.m:
        return
    i = data.draw(st.integers(0, g.m - 1))
    h = g.contract(i)
    assert h.m == g.m - 1
    assert h.n == g.n - (0 if g.is_loop(i) else 1)


def test_contract_merges_into_smaller_endpoint():
    g = Multigraph(3, ((1, 2), (0, 2), (2, 2)))
    assert g.contract(0) == Multigraph(2, ((0, 1), (1, 1)))


def test_as_hypergraph_turns_loop_into_singleton():
    assert Multigraph(2, ((1, 1), (0, 1))).as_hypergraph().edges == ((1,), (0, 1))


def test_text_roundtrip():
    g = Multigraph(3, ((0, 1), (2, 2), (0, 1)))
    assert parse_multigraph(g.to_text()) == g
    assert g.to_text().splitlines()[0] == "p mg 3 3"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("p mg 2 1\na 0 7\n", 2, 5),
        ("p mg 2 1\na 0\n", 2, 1),
        ("p mg 2 1\na x 1\n", 2, 3),
        ("p hg 2 1\n", 1, 1),
        ("p mg 2 2\na 0 1\n", 2, 1),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_multigraph(text)
    assert (info.value.line, info.value.column) == (line, column)

"""Graph and witness document round-trips and golden strings."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from accordions import (
    Graph,
    InvalidParameterError,
    VertexMap,
    accordion,
    cycle_graph,
    graph_from_json,
    graph_to_dot,
    graph_to_edgelist,
    graph_to_json,
    witness_from_json,
    witness_to_json,
)


def test_json_golden_triangle():
    assert graph_to_json(cycle_graph(3)) == '{"order":3,"edges":[[0,1],[0,2],[1,2]]}\n'


def test_json_is_newline_terminated_without_trailing_space():
    doc = graph_to_json(accordion(4, 2))
    assert doc.endswith("\n") and not doc.rstrip("\n").endswith(" ")


def test_json_roundtrip_family():
    g = accordion(7, 3)
    assert graph_from_json(graph_to_json(g)) == g


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 10))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return Graph(n, tuple(edges))


@given(graphs())
def test_json_roundtrip_random(g):
    assert graph_from_json(graph_to_json(g)) == g


def test_dot_golden_triangle():
    assert graph_to_dot(cycle_graph(3)) == (
        "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
    )


def test_dot_lists_every_vertex():
    g = Graph(4, ((0, 1),))  # vertices 2,3 isolated
    dot = graph_to_dot(g)
    for v in range(4):
        assert f"  {v};" in dot


def test_edgelist_golden():
    assert graph_to_edgelist(cycle_graph(3)) == "0 1\n0 2\n1 2\n"


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"order":3}',
        '{"order":3,"edges":[[0,1]],"extra":1}',
        '{"order":"3","edges":[]}',
        '{"order":3,"edges":[[0,1,2]]}',
        '{"order":3,"edges":[[0,0]]}',
        '{"order":3,"edges":[[0,5]]}',
        '{"order":3,"edges":[[0,1],[1,0]]}',
    ],
)
def test_graph_parse_errors(text):
    with pytest.raises(InvalidParameterError):
        graph_from_json(text)


def test_witness_roundtrip():
    g = cycle_graph(4)
    h = g.relabel([1, 2, 3, 0])
    vm = VertexMap(4, 4, (1, 2, 3, 0))
    doc = witness_to_json(g, h, vm)
    src, tgt, back = witness_from_json(doc)
    assert src == g and tgt == h and back == vm


def test_witness_parse_errors():
    with pytest.raises(InvalidParameterError):
        witness_from_json('{"source":{},"target":{},"mapping":[]}')
    with pytest.raises(InvalidParameterError):
        witness_from_json("[]")

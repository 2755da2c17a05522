import pytest
from conftest import connected_graphs
from hypothesis import given
from hypothesis import strategies as st

from gagmax import families
from gagmax.errors import DisconnectedGraphError, Graph6Error, GraphError
from gagmax.graph import (
    Graph,
    emit_graph6,
    format_edge_list,
    masks_to_graph6,
    parse_edge_list,
    parse_graph6,
)


@pytest.mark.parametrize(
    "text, n, edges",
    [
        ("@", 1, []),
        ("A_", 2, [(0, 1)]),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("Bg", 3, [(0, 1), (1, 2)]),
        ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ],
)
def test_graph6_known_encodings(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n and list(g.edges) == edges
    assert emit_graph6(g) == text


def test_graph6_bit_order_is_column_major():
    # pairs (0,1),(0,2),(1,2),(0,3),... ; only (0,3) set -> bits 000100 -> 4 + 63
    g = Graph.from_edges(4, [(0, 3), (1, 3), (2, 3)])
    assert emit_graph6(g) == "C" + chr(63 + 0b000111)
    assert masks_to_graph6(g.masks, 4) == emit_graph6(g)


@given(connected_graphs(max_n=14))
def test_graph6_roundtrip(g):
    h = parse_graph6(emit_graph6(g))
    assert h.n == g.n and h.edges == g.edges


@given(connected_graphs(max_n=14))
def test_graph6_matches_networkx(g):
    import networkx as nx
    from conftest import to_nx

    assert emit_graph6(g).encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<Bw\n").edges == parse_graph6("Bw").edges


@pytest.mark.parametrize(
    "bad",
    ["", "?", "A", "A_x", "B" + chr(62), "Ao", "~??B"],
)
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError, match="disconnected input"):
        parse_graph6("A?")


def test_graph6_emission_cap():
    big = families.path(63)
    with pytest.raises(Graph6Error):
        emit_graph6(big)


def test_edge_list_literal():
    g = parse_edge_list("n=4; 0-1 1-2 2-0 2-3")
    assert g.edges == ((0, 1), (0, 2), (1, 2), (2, 3))
    assert parse_edge_list(format_edge_list(g)).edges == g.edges
    assert parse_edge_list("n=1").n == 1


@pytest.mark.parametrize("bad", ["n=3; 0-1 1-1", "n=3; 0-1 1-5", "n=3; 0_1 1-2", "m=3; 0-1", "n=4; 0-1 2-3"])
def test_edge_list_errors(bad):
    with pytest.raises(GraphError):
        parse_edge_list(bad)


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(GraphError):
        Graph.from_edges(0, [])


@given(connected_graphs(max_n=10), st.randoms())
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees) == sorted(g.degrees) and h.m == g.m

import itertools
import json
from collections import Counter
from pathlib import Path

import networkx as nx
import pytest
from conftest import to_nx

from gagmax import families
from gagmax.canon import canonical_form
from gagmax.enumeration import EnumFilter, enumerate_connected, enumerate_masks
from gagmax.errors import CapExceeded
from gagmax.graph import Graph, emit_graph6

COUNTS = json.loads((Path(__file__).parent / "data" / "connected_counts.json").read_text())


def brute_force(n: int, pred=lambda h: True) -> list[nx.Graph]:
    """Every labelled graph on n vertices, reduced by isomorphism testing."""
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[nx.Graph] = []
    for bits in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if bits >> i & 1)
        if not nx.is_connected(h) or not pred(h):
            continue
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return reps


def test_counts_small_against_brute_force():
    by_n = Counter(g.n for g in enumerate_connected(EnumFilter(max_vertices=4)))
    assert [by_n[n] for n in range(1, 5)] == [1, 1, 2, 6]
    assert [len(brute_force(n)) for n in range(1, 5)] == [1, 1, 2, 6]


def test_trees_against_brute_force():
    trees = [g for g in enumerate_connected(EnumFilter(max_vertices=6, trees_only=True)) if g.n == 6]
    ref = brute_force(6, nx.is_tree)
    assert len(trees) == len(ref) == 6
    for g in trees:
        assert sum(nx.is_isomorphic(to_nx(g), r) for r in ref) == 1


def test_counts_against_atlas_fixture():
    graphs = list(enumerate_connected(EnumFilter(max_vertices=7)))
    by_n = Counter(g.n for g in graphs)
    by_ne = Counter(f"{g.n},{g.m}" for g in graphs)
    assert {str(k): v for k, v in by_n.items()} == COUNTS["by_n"]
    assert dict(by_ne) == COUNTS["by_n_e"]


def test_atlas_isomorphism_classes_covered():
    forms = {emit_graph6(g) for g in enumerate_connected(EnumFilter(max_vertices=6))}
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= 6 and nx.is_connected(h):
            g = Graph.from_edges(h.number_of_nodes(), list(h.edges()))
            assert canonical_form(g).decode() in forms


def test_no_duplicates_and_canonical_output():
    graphs = list(enumerate_connected(EnumFilter(max_vertices=8)))
    assert len(graphs) == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117
    forms = [emit_graph6(g) for g in graphs]
    assert len(set(forms)) == len(forms)
    sample = graphs[:: max(1, len(graphs) // 300)]
    assert all(canonical_form(g).decode() == emit_graph6(g) for g in sample)
    assert forms == sorted(forms, key=lambda s: (parse_n(s), s))
    small = [g for g in graphs if g.n <= 6]
    for a, b in itertools.combinations([g for g in small if g.n == 5], 2):
        assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def parse_n(g6: str) -> int:
    return ord(g6[0]) - 63


def test_regular_counts():
    by_n = Counter(g.n for g in enumerate_connected(EnumFilter(max_vertices=10, regular_only=True)))
    # connected regular graphs of every degree, OEIS A005177
    assert [by_n[n] for n in range(1, 11)] == [1, 1, 1, 2, 2, 5, 4, 17, 22, 167]
    cubic = Counter(g.n for g in enumerate_connected(EnumFilter(max_vertices=10, regular_only=True, degree=3)))
    assert dict(cubic) == {4: 1, 6: 2, 8: 5, 10: 19}


def test_regular_includes_reference_graphs():
    forms = {
        emit_graph6(g)
        for g in enumerate_connected(EnumFilter(max_vertices=10, min_vertices=10, regular_only=True, degree=3))
    }
    assert canonical_form(families.regular_gag_a()).decode() in forms
    assert canonical_form(families.regular_gag_b()).decode() in forms


def test_filters():
    gs = list(enumerate_connected(EnumFilter(max_vertices=7, max_edges=7)))
    assert all(g.m <= 7 for g in gs)
    assert sum(g.n == 7 and g.m == 6 for g in gs) == 11
    leafless = list(enumerate_connected(EnumFilter(max_vertices=6, min_degree=2)))
    assert all(min(g.degrees) >= 2 for g in leafless)
    by_n = Counter(g.n for g in leafless)
    for n in range(1, 6):
        assert by_n[n] == len(brute_force(n, lambda h: n >= 3 and min(d for _, d in h.degree()) >= 2))
    assert all(g.n >= 3 for g in enumerate_connected(EnumFilter(max_vertices=5, min_vertices=3)))


def test_caps():
    with pytest.raises(CapExceeded):
        EnumFilter(max_vertices=11)
    with pytest.raises(CapExceeded):
        EnumFilter(max_vertices=13, allow_large=True)
    assert EnumFilter(max_vertices=12, allow_large=True).max_vertices == 12
    with pytest.raises(ValueError):
        EnumFilter(max_vertices=5, degree=3)


def test_parallel_matches_serial():
    flt = EnumFilter(max_vertices=7)
    assert enumerate_masks(flt, workers=2) == enumerate_masks(flt, workers=1)

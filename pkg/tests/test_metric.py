import networkx as nx
import pytest
from conftest import connected_graphs, to_nx
from hypothesis import given

from gagmax import families
from gagmax.graph import Graph
from gagmax.metric import (
    antipode,
    ball,
    classify,
    eccentricity,
    global_antipode,
    is_distance_regular,
    is_gag,
    leaves,
    sphere,
)


@given(connected_graphs(max_n=12))
def test_eccentricity_radius_diameter_match_networkx(g):
    h = to_nx(g)
    ecc = nx.eccentricity(h)
    dt = g.distance_table
    assert list(dt.ecc) == [ecc[v] for v in range(g.n)]
    assert dt.radius == nx.radius(h) and dt.diameter == nx.diameter(h)


@given(connected_graphs(max_n=10))
def test_spheres_partition_vertices(g):
    for x in range(g.n):
        e = eccentricity(g, x)
        parts = [set(sphere(g, x, r)) for r in range(e + 1)]
        assert all(parts) and set().union(*parts) == set(range(g.n))
        assert sum(map(len, parts)) == g.n
        assert set(ball(g, x, e)) == set(range(g.n))
        assert antipode(g, x) == sphere(g, x, e)
        assert sphere(g, x, e + 1) == ()


def test_kite():
    g = families.kite()
    assert sphere(g, 2, 1) == (0, 1, 3)
    assert global_antipode(g) == (0, 1, 3)
    c = classify(g)
    assert c.is_gag and c.is_eccentric and not c.is_sphere_regular
    assert (c.radius, c.diameter) == (1, 2)
    assert c.is_vertex_transitive is False


@pytest.mark.parametrize(
    "g, gag, ant_size",
    [
        (families.path(3), True, 2),
        (families.kite(), True, 3),
        (families.hourglass(), True, 4),
        (families.spider(), True, 2),
        (families.cycle(6), False, 6),
        (families.complete(3), False, 3),
        (families.regular_gag_a(), True, 9),
        (families.regular_gag_b(), True, 4),
    ],
)
def test_gag_examples(g, gag, ant_size):
    assert is_gag(g) is gag
    assert len(global_antipode(g)) == ant_size


def test_regular_figures_shape():
    a, b = classify(families.regular_gag_a()), classify(families.regular_gag_b())
    assert (a.radius, a.diameter) == (2, 3) and (b.radius, b.diameter) == (3, 5)
    assert set(families.regular_gag_a().degrees) == {3} == set(families.regular_gag_b().degrees)


def test_spider_leaves_exceed_antipode():
    g = families.spider()
    assert leaves(g) == (0, 4, 5) and global_antipode(g) == (0, 4)


@given(connected_graphs(max_n=9))
def test_gag_implies_eccentric(g):
    c = classify(g)
    if c.is_gag:
        assert c.is_eccentric
        assert not c.is_sphere_regular and not c.is_distance_regular and not c.is_vertex_transitive


@given(connected_graphs(max_n=10))
def test_distance_regular_matches_networkx(g):
    assert is_distance_regular(g) == nx.is_distance_regular(to_nx(g))


def test_classification_json_and_caps():
    c = classify(families.cycle(14))
    assert c.is_sphere_regular and c.is_vertex_transitive is None
    assert c.to_json()["is_vertex_transitive"] == "not computed"
    assert classify(families.cycle(14), vt_cap=14).is_vertex_transitive is True


def test_tree_flag_is_literal():
    assert classify(families.path(2)).is_tree
    assert not classify(families.cycle(4)).is_tree
    assert classify(Graph.from_edges(1, [])).is_tree

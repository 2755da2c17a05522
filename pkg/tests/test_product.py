import itertools
import math

import networkx as nx
import pytest
from conftest import connected_graphs, to_nx
from hypothesis import given
from hypothesis import strategies as st

from gagmax import families
from gagmax.errors import BudgetExceeded, GraphError
from gagmax.metric import global_antipode
from gagmax.product import (
    PowerGraph,
    Profile,
    cartesian_product,
    power_distance,
    power_global_antipode,
    power_sphere_sizes,
    profile_count,
    profiles,
    verify_antipode_product,
)

SMALL = [families.path(3), families.kite(), families.complete(2), families.cycle(5), families.star(3)]


def test_k2_square_is_c4():
    g = cartesian_product(families.complete(2), families.complete(2))
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(4))


def test_ladder():
    g = cartesian_product(families.path(3), families.complete(2))
    assert (g.n, g.m) == (6, 7)


@given(connected_graphs(max_n=5), connected_graphs(max_n=5))
def test_product_matches_networkx(g, h):
    prod = cartesian_product(g, h)
    ref = nx.cartesian_product(to_nx(g), to_nx(h))
    relabeled = nx.relabel_nodes(ref, {(i, j): i * h.n + j for i, j in ref.nodes})
    assert set(prod.edges) == {tuple(sorted(e)) for e in relabeled.edges}


@pytest.mark.parametrize("g", SMALL)
@pytest.mark.parametrize("N", [1, 2, 3])
def test_power_distance_and_spheres_match_bfs(g, N):
    pg = PowerGraph(g, N)
    mat = pg.materialize()
    D = mat.distance_table.dist
    for i in range(mat.n):
        x = pg.tuple_at(i)
        assert pg.index(x) == i
        sizes = power_sphere_sizes(pg, x)
        assert len(sizes) == N * g.distance_table.diameter + 1
        for j in range(mat.n):
            assert power_distance(pg, x, pg.tuple_at(j)) == D[i, j]
        brute = [0] * len(sizes)
        for j in range(mat.n):
            brute[D[i, j]] += 1
        assert sizes == brute
        # spheres are nonempty exactly up to the summed eccentricity
        ecc_sum = sum(g.distance_table.ecc[v] for v in x)
        assert all(s > 0 for s in sizes[: ecc_sum + 1]) and not any(sizes[ecc_sum + 1:])
        assert sizes == power_sphere_sizes(pg, Profile.of(x, g.n))


def test_materialize_matches_iterated_product():
    g = families.kite()
    a = PowerGraph(g, 2).materialize()
    b = cartesian_product(g, g)
    assert a.edges == b.edges


def test_sphere_size_examples():
    assert power_sphere_sizes(PowerGraph(families.path(3), 2), (1, 1)) == [1, 4, 4, 0, 0]
    for N in range(1, 7):
        pg = PowerGraph(families.complete(2), N)
        assert power_sphere_sizes(pg, (0,) * N) == [math.comb(N, r) for r in range(N + 1)]
    assert power_distance(PowerGraph(families.path(3), 2), (0, 0), (2, 2)) == 4


def test_profiles():
    pg = PowerGraph(families.complete(2), 3)
    assert [(p.counts, o) for p, o in profiles(pg)] == [((3, 0), 1), ((2, 1), 3), ((1, 2), 3), ((0, 3), 1)]
    pg = PowerGraph(families.kite(), 4)
    assert sum(o for _, o in profiles(pg)) == 4**4
    assert profile_count(4, 8) == 165 == len(list(profiles(PowerGraph(families.kite(), 8))))


@given(st.integers(1, 5), st.integers(1, 6))
def test_profile_orbits_sum(m, N):
    pg = PowerGraph(families.path(m) if m > 1 else families.complete(1), N)
    ps = list(profiles(pg))
    assert len(ps) == profile_count(m, N)
    assert sum(o for _, o in ps) == m**N


def test_power_global_antipode():
    d = power_global_antipode(PowerGraph(families.kite(), 2))
    assert d.size == 9 and d.is_gag and d.factor == (0, 1, 3)
    mat = PowerGraph(families.kite(), 2).materialize()
    direct = set(global_antipode(mat))
    pg = PowerGraph(families.kite(), 2)
    assert direct == {pg.index(x) for x in d.vertices()}
    assert not power_global_antipode(PowerGraph(families.complete(2), 2)).is_gag


def test_mixed_product_antipode():
    g, h = families.path(3), families.kite()
    prod = cartesian_product(g, h)
    assert len(global_antipode(prod)) == 6
    assert verify_antipode_product(g, h)


def test_antipode_product_all_fixture_pairs(fixtures6):
    for g, h in itertools.product(fixtures6, repeat=2):
        assert verify_antipode_product(g, h)
    assert verify_antipode_product(families.cycle(4), families.cycle(4))


def test_budgets_and_errors():
    with pytest.raises(BudgetExceeded):
        PowerGraph(families.kite(), 10).materialize()
    with pytest.raises(GraphError):
        PowerGraph(families.kite(), 0)
    pg = PowerGraph(families.kite(), 2)
    with pytest.raises(ValueError):
        power_distance(pg, (0,), (0, 0))
    with pytest.raises(ValueError):
        pg.index((0, 9))
    with pytest.raises(BudgetExceeded):
        verify_antipode_product(families.path(600), families.path(600))

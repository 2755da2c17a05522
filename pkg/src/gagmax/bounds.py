"""Bound certificates for ``||M_N||_p`` on Cartesian powers.

Bounds are stored as p-th powers (``||M_N||_p^p``) so they stay rational;
for ``p = inf`` the stored value is the norm itself, which is always 1.

Exact L^1 norm
--------------
For ``f >= 0`` write ``f = sum_y f(y) delta_y``.  ``M`` is sublinear and
positively homogeneous, so ``Mf <= sum_y f(y) M delta_y`` pointwise and

    ||Mf||_1 <= sum_y f(y) ||M delta_y||_1 <= max_y ||M delta_y||_1 * ||f||_1.

General ``f`` reduce to ``|f|`` because ``Mf <= M|f|``.  A delta mass
attains the bound, hence ``||M||_1 = max_y sum_x M delta_y(x)`` with
``M delta_y(x) = 1 / |S_{d(x,y)}(x)|``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from gagmax.errors import (
    BudgetExceeded,
    NotAGAGError,
    NotATreeError,
    NotSphereRegularError,
)
from gagmax.graph import GRAPH6_MAX_N, Graph, emit_graph6
from gagmax.maximal import VertexFunction, lp_norm, maximal_function, parse_p
from gagmax.metric import global_antipode, is_tree, leaves, sphere_profile
from gagmax.product import (
    MATERIALIZATION_BUDGET,
    PowerGraph,
    Profile,
    power_sphere_sizes,
    profile_count,
    profiles,
)

# profile count times |V|^N, the cost of the implicit exact L^1 evaluation
L1_IMPLICIT_BUDGET = 2_000_000


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BoundEntry:
    value: Fraction
    provenance: str
    witness: str | None = None

    def to_json(self) -> dict:
        d = {"value_pth_power": frac_str(self.value), "provenance": self.provenance}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class BoundReport:
    graph: str
    N: int
    p: int | float
    lower: list[BoundEntry] = field(default_factory=list)
    upper: list[BoundEntry] = field(default_factory=list)
    leaf_fraction: Fraction | None = None

    def consistent(self) -> bool:
        """Every lower bound is at most every upper bound."""
        return all(lo.value <= up.value for lo in self.lower for up in self.upper)

    @property
    def best_lower(self) -> BoundEntry | None:
        return max(self.lower, key=lambda e: e.value, default=None)

    @property
    def best_upper(self) -> BoundEntry | None:
        return min(self.upper, key=lambda e: e.value, default=None)

    def to_json(self) -> dict:
        d = {
            "graph": self.graph,
            "N": self.N,
            "p": "inf" if self.p == math.inf else self.p,
            "lower": [e.to_json() for e in self.lower],
            "upper": [e.to_json() for e in self.upper],
        }
        if self.leaf_fraction is not None:
            d["leaf_fraction"] = frac_str(self.leaf_fraction)
        return d


def _check_N(N: int) -> None:
    if N < 1:
        raise ValueError("N must be a positive integer")


def _sup_entry() -> BoundEntry:
    return BoundEntry(Fraction(1), "p = inf: ||Mf||_inf <= ||f||_inf with equality at f = 1")


def gag_lower_bound(g: Graph, N: int, p) -> BoundEntry:
    """``(|G| / |ant G|)^N <= ||M_N||_p^p``, witnessed by ``1_{ant(G)^N}``."""
    _check_N(N)
    p = parse_p(p)
    ant = global_antipode(g)
    if len(ant) == g.n:
        raise NotAGAGError("global antipode is the whole vertex set; the bound degenerates to 1")
    if p == math.inf:
        return _sup_entry()
    return BoundEntry(
        Fraction(g.n, len(ant)) ** N,
        "GAG indicator bound (|G|/|ant G|)^N",
        f"1_{{ant(G)^N}}, ant(G) = {list(ant)}",
    )


def tree_leaf_bound(t: Graph, N: int, p) -> BoundEntry:
    """``(|T| / |leaf T|)^N``; never better than :func:`gag_lower_bound` since ``ant T ⊆ leaf T``."""
    _check_N(N)
    p = parse_p(p)
    if not is_tree(t):
        raise NotATreeError("graph is not a tree")
    if t.n < 3:
        raise NotATreeError("trees are taken to have at least 3 vertices")
    if p == math.inf:
        return _sup_entry()
    return BoundEntry(
        Fraction(t.n, len(leaves(t))) ** N,
        "tree leaf bound (|T|/|leaf T|)^N",
        f"1_{{leaf(T)^N}}, leaf(T) = {list(leaves(t))}",
    )


def apriori_upper(g: Graph, N: int, p) -> BoundEntry:
    _check_N(N)
    p = parse_p(p)
    if p == math.inf:
        return _sup_entry()
    return BoundEntry(Fraction(g.n) ** N, "a priori |G|^N from ||Mf||_inf <= ||f||_inf")


def srg_upper(g: Graph, N: int, p) -> BoundEntry:
    """``N diam(G) + 1`` for sphere regular ``G``.

    On a sphere-regular power, ``M_N`` is pointwise at most the sum of the
    ``N diam(G) + 1`` sphere-averaging operators, each of norm 1 on ``L^1``
    and ``L^inf``; interpolating gives the bound on the p-th power.
    """
    _check_N(N)
    p = parse_p(p)
    if len(set(sphere_profile(g))) != 1:
        raise NotSphereRegularError("not sphere regular")
    if p == math.inf:
        return _sup_entry()
    return BoundEntry(
        Fraction(N * g.distance_table.diameter + 1),
        "sphere-regular bound N*diam(G)+1",
    )


def delta_mass_l1(g: Graph, y: int) -> Fraction:
    """``||M delta_y||_1 = sum_x 1 / |S_{d(x,y)}(x)|``."""
    D = g.distance_table.dist
    acc: dict[int, int] = {}
    for x in range(g.n):
        s = g.distance_table.sphere_sizes(x)[int(D[x, y])]
        acc[s] = acc.get(s, 0) + 1
    return sum((Fraction(c, s) for s, c in acc.items()), Fraction(0))


def l1_norm_exact(g: Graph | PowerGraph, budget: int = MATERIALIZATION_BUDGET) -> Fraction:
    """Exact ``||M||_1 = max_y ||M delta_y||_1`` (see the module docstring)."""
    if isinstance(g, Graph):
        dt = g.distance_table
        D = dt.dist
        sizes = [dt.sphere_sizes(x) for x in range(g.n)]
        best = Fraction(0)
        for y in range(g.n):
            acc: dict[int, int] = {}
            for x in range(g.n):
                s = sizes[x][int(D[x, y])]
                acc[s] = acc.get(s, 0) + 1
            best = max(best, sum((Fraction(c, s) for s, c in acc.items()), Fraction(0)))
        return best
    pg = g
    if pg.size > budget:
        raise BudgetExceeded(f"|V|^N = {pg.size} exceeds materialization budget {budget}")
    m = pg.base.n
    D = pg.base_distances.dist
    size_cache: dict[tuple[int, ...], list[int]] = {}

    def sizes_of(x: tuple[int, ...]) -> list[int]:
        key = tuple(sorted(x))
        if key not in size_cache:
            size_cache[key] = power_sphere_sizes(pg, Profile.of(key, m))
        return size_cache[key]

    best = Fraction(0)
    # ||M delta_y||_1 is invariant under coordinate permutations of y
    for prof, _ in profiles(pg):
        y = prof.representative()
        acc: dict[int, int] = {}
        for x in itertools.product(range(m), repeat=pg.N):
            r = sum(int(D[a, b]) for a, b in zip(x, y))
            s = sizes_of(x)[r]
            acc[s] = acc.get(s, 0) + 1
        val = sum((Fraction(c, s) for s, c in acc.items()), Fraction(0))
        best = max(best, val)
    return best


def indicator_ratio(g: Graph, A: Iterable[int], p) -> tuple[Fraction, VertexFunction]:
    """``||M 1_A||_p^p / ||1_A||_p^p`` (exact), a lower bound on ``||M||_p^p``."""
    members = sorted(set(A))
    if not members:
        raise ValueError("indicator set must be nonempty")
    f = VertexFunction.indicator(g.n, members)
    Mf = maximal_function(g, f).Mf
    p = parse_p(p)
    return lp_norm(Mf, p) / lp_norm(f, p), f


def graph_id(g: Graph) -> str:
    if g.n <= GRAPH6_MAX_N:
        return emit_graph6(g)
    return g.label or f"n={g.n}"


def bound_report(g: Graph, N: int, p, l1_budget: int = L1_IMPLICIT_BUDGET) -> BoundReport:
    """Every bound that applies to ``||M_N||_p`` on ``g^N``."""
    _check_N(N)
    p = parse_p(p)
    if p != math.inf and p < 1:
        raise ValueError("p must be >= 1")
    rep = BoundReport(graph_id(g), N, p)
    if is_tree(g) and g.n >= 3:
        rep.leaf_fraction = Fraction(len(leaves(g)), g.n)
    if p == math.inf:
        rep.lower.append(_sup_entry())
        rep.upper.append(_sup_entry())
        return rep
    rep.lower.append(BoundEntry(Fraction(1), "trivial: f = 1 gives M1 = 1", "1"))
    if len(global_antipode(g)) < g.n:
        rep.lower.append(gag_lower_bound(g, N, p))
    if is_tree(g) and g.n >= 3:
        rep.lower.append(tree_leaf_bound(g, N, p))
    rep.upper.append(apriori_upper(g, N, p))
    if len(set(sphere_profile(g))) == 1:
        rep.upper.append(srg_upper(g, N, p))
    if p == 1 and profile_count(g.n, N) * g.n ** N <= l1_budget:
        exact = l1_norm_exact(PowerGraph(g, N)) if N > 1 else l1_norm_exact(g)
        entry = BoundEntry(exact, "exact L^1 norm max_y ||M delta_y||_1", "delta mass")
        rep.lower.append(entry)
        rep.upper.append(entry)
    return rep

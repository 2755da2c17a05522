"""Cartesian products, implicit Cartesian powers and profile symmetry.

Distances in ``G^N`` add coordinatewise, so the sphere sizes about a tuple
``x`` are the coefficients of ``prod_k P_{x_k}(t)`` where ``P_v(t)`` is the
sphere-size polynomial of ``v`` in the base graph.  Permuting coordinates
is an isometry of ``G^N``, so anything built from distances depends on
``x`` only through its profile (how many coordinates equal each base
vertex).  The materialized-power tests check both facts against BFS.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from gagmax.errors import BudgetExceeded, GraphError
from gagmax.graph import Graph
from gagmax.metric import DistanceTable, global_antipode

MATERIALIZATION_BUDGET = 250_000


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h`` with vertex ``(i, j)`` at index ``i * h.n + j``."""
    nh = h.n
    edges = []
    for i in range(g.n):
        for j1, j2 in h.edges:
            edges.append((i * nh + j1, i * nh + j2))
    for i1, i2 in g.edges:
        for j in range(nh):
            edges.append((i1 * nh + j, i2 * nh + j))
    label = f"{g.label or 'G'}x{h.label or 'H'}"
    return Graph.from_edges(g.n * nh, edges, label)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_pow(a: Sequence[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


@dataclass(frozen=True)
class Profile:
    """Multiplicity vector: ``counts[v]`` coordinates equal base vertex ``v``."""

    counts: tuple[int, ...]

    @property
    def N(self) -> int:
        return sum(self.counts)

    @property
    def orbit_size(self) -> int:
        out = math.factorial(self.N)
        for c in self.counts:
            out //= math.factorial(c)
        return out

    def representative(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.counts) for _ in range(c))

    @classmethod
    def of(cls, x: Sequence[int], m: int) -> Profile:
        counts = [0] * m
        for v in x:
            counts[v] += 1
        return cls(tuple(counts))


def profile_count(m: int, N: int) -> int:
    return math.comb(N + m - 1, m - 1)


def _compositions(N: int, m: int) -> Iterator[tuple[int, ...]]:
    if m == 1:
        yield (N,)
        return
    for c in range(N, -1, -1):
        for rest in _compositions(N - c, m - 1):
            yield (c,) + rest


@dataclass(frozen=True)
class PowerGraph:
    """Implicit ``base^N``; the vertex universe is ``V(base)^N``."""

    base: Graph
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise GraphError("exponent must be a positive integer")

    @property
    def base_distances(self) -> DistanceTable:
        return self.base.distance_table

    @property
    def size(self) -> int:
        return self.base.n ** self.N

    @property
    def diameter(self) -> int:
        return self.N * self.base_distances.diameter

    @cached_property
    def base_sphere_polys(self) -> tuple[tuple[int, ...], ...]:
        dt = self.base_distances
        return tuple(dt.sphere_sizes(v) for v in range(self.base.n))

    def index(self, x: Sequence[int]) -> int:
        """Position of tuple ``x`` in the materialized power (first coordinate most significant)."""
        self._check(x)
        i = 0
        for v in x:
            i = i * self.base.n + v
        return i

    def tuple_at(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.N):
            i, v = divmod(i, self.base.n)
            out.append(v)
        return tuple(reversed(out))

    def vertices(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.base.n), repeat=self.N)

    def materialize(self, budget: int = MATERIALIZATION_BUDGET) -> Graph:
        """The explicit graph ``base^N`` (equal to iterated ``cartesian_product``)."""
        if self.size > budget:
            raise BudgetExceeded(f"|V|^N = {self.size} exceeds materialization budget {budget}")
        m = self.base.n
        edges = []
        for i in range(self.size):
            x = self.tuple_at(i)
            stride = self.size
            for k, v in enumerate(x):
                stride //= m
                for u in self.base.adj[v]:
                    if u > v:
                        edges.append((i, i + (u - v) * stride))
        label = f"{self.base.label or 'G'}^{self.N}"
        return Graph.from_edges(self.size, edges, label)

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.N:
            raise ValueError(f"expected a tuple of length {self.N}, got {len(x)}")
        for v in x:
            if not 0 <= v < self.base.n:
                raise ValueError(f"coordinate {v} is not a base vertex")


def power_distance(pg: PowerGraph, x: Sequence[int], y: Sequence[int]) -> int:
    pg._check(x)
    pg._check(y)
    d = pg.base_distances.dist
    return int(sum(int(d[a, b]) for a, b in zip(x, y)))


def power_sphere_sizes(pg: PowerGraph, x: Sequence[int] | Profile) -> list[int]:
    """Sphere sizes about ``x`` for radii ``0..N*diam(base)`` (exact integers)."""
    polys = pg.base_sphere_polys
    if isinstance(x, Profile):
        if len(x.counts) != pg.base.n or x.N != pg.N:
            raise ValueError("profile does not match the power graph")
        out = [1]
        for v, c in enumerate(x.counts):
            if c:
                out = poly_mul(out, poly_pow(polys[v], c))
    else:
        pg._check(x)
        out = [1]
        for v in x:
            out = poly_mul(out, polys[v])
    out.extend([0] * (pg.diameter + 1 - len(out)))
    return out


def profiles(pg: PowerGraph) -> Iterator[tuple[Profile, int]]:
    """Every profile with its orbit size, first coordinate counted down from N."""
    for counts in _compositions(pg.N, pg.base.n):
        p = Profile(counts)
        yield p, p.orbit_size


@dataclass(frozen=True)
class ProductAntipode:
    """``ant(base)^N`` as a product-set descriptor."""

    factor: tuple[int, ...]
    N: int
    base_n: int

    @property
    def size(self) -> int:
        return len(self.factor) ** self.N

    @property
    def is_gag(self) -> bool:
        return len(self.factor) < self.base_n

    def __contains__(self, x: Sequence[int]) -> bool:
        fs = set(self.factor)
        return len(x) == self.N and all(v in fs for v in x)

    def vertices(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(self.factor, repeat=self.N)

    def to_json(self) -> dict:
        return {"factor": list(self.factor), "N": self.N, "size": self.size, "is_gag": self.is_gag}


def power_global_antipode(pg: PowerGraph) -> ProductAntipode:
    return ProductAntipode(global_antipode(pg.base), pg.N, pg.base.n)


def verify_antipode_product(g: Graph, h: Graph, budget: int = MATERIALIZATION_BUDGET) -> bool:
    """Compare the directly computed ``ant(g □ h)`` with ``ant(g) × ant(h)``."""
    if g.n * h.n > budget:
        raise BudgetExceeded(f"|g|*|h| = {g.n * h.n} exceeds materialization budget {budget}")
    direct = set(global_antipode(cartesian_product(g, h)))
    predicted = {i * h.n + j for i in global_antipode(g) for j in global_antipode(h)}
    return direct == predicted

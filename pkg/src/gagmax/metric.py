"""Shortest-path metric, spheres, antipodes and structural classification."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from gagmax import kernels
from gagmax.canon import DEFAULT_VT_CAP, is_vertex_transitive
from gagmax.graph import Graph


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs distances (read-only ``int32`` array) with eccentricities."""

    dist: np.ndarray
    ecc: tuple[int, ...]
    radius: int
    diameter: int

    def sphere_sizes(self, x: int) -> tuple[int, ...]:
        """``|S_r(x)|`` for ``r = 0..ecc(x)``."""
        return tuple(np.bincount(self.dist[x]).tolist())


def _compute_distances(g: Graph) -> DistanceTable:
    d = kernels.bfs_all_pairs(*g.csr, g.n)
    d.setflags(write=False)
    ecc = tuple(int(e) for e in d.max(axis=1))
    return DistanceTable(d, ecc, min(ecc), max(ecc))


def distances(g: Graph) -> DistanceTable:
    return g.distance_table


def eccentricity(g: Graph, x: int) -> int:
    return g.distance_table.ecc[x]


def sphere(g: Graph, x: int, r: int) -> tuple[int, ...]:
    """Vertices at distance exactly ``r`` from ``x``, sorted."""
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range")
    if r < 0:
        return ()
    return tuple(np.flatnonzero(g.distance_table.dist[x] == r).tolist())


def ball(g: Graph, x: int, r: int) -> tuple[int, ...]:
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range")
    return tuple(np.flatnonzero(g.distance_table.dist[x] <= r).tolist())


def antipode(g: Graph, x: int) -> tuple[int, ...]:
    """The nonempty sphere of maximal radius about ``x``."""
    return sphere(g, x, eccentricity(g, x))


def global_antipode(g: Graph) -> tuple[int, ...]:
    dt = g.distance_table
    ecc = np.asarray(dt.ecc)
    hit = (dt.dist == ecc[:, None]).any(axis=0)
    return tuple(np.flatnonzero(hit).tolist())


def is_gag(g: Graph) -> bool:
    return len(global_antipode(g)) < g.n


def leaves(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if g.degrees[v] == 1)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1


def sphere_profile(g: Graph) -> tuple[tuple[int, ...], ...]:
    dt = g.distance_table
    return tuple(dt.sphere_sizes(x) for x in range(g.n))


def is_distance_regular(g: Graph) -> bool:
    """Check that the intersection numbers b_i, c_i depend only on i.

    For ``d(x, y) = i`` these count neighbours of ``y`` at distance
    ``i + 1`` and ``i - 1`` from ``x``; ``a_i`` then follows from the degree,
    which must be constant.
    """
    if len(set(g.degrees)) != 1:
        return False
    dt = g.distance_table
    D = dt.dist
    diam = dt.diameter
    indptr, indices = g.csr
    src = np.repeat(np.arange(g.n), np.diff(indptr))
    b = [-1] * (diam + 1)
    c = [-1] * (diam + 1)
    for x in range(g.n):
        row = D[x].astype(np.int64)
        onehot = np.zeros((g.n, diam + 2), dtype=np.int64)
        onehot[np.arange(g.n), row] = 1
        # counts[y, r]: neighbours of y at distance r from x
        counts = np.zeros((g.n, diam + 2), dtype=np.int64)
        np.add.at(counts, src, onehot[indices])
        for y in range(g.n):
            i = int(row[y])
            bi = int(counts[y, i + 1])
            ci = int(counts[y, i - 1]) if i > 0 else 0
            if b[i] < 0:
                b[i], c[i] = bi, ci
            elif (b[i], c[i]) != (bi, ci):
                return False
    return True


@dataclass(frozen=True)
class Classification:
    n: int
    m: int
    radius: int
    diameter: int
    is_tree: bool
    leaf_set: tuple[int, ...]
    is_gag: bool
    global_antipode: tuple[int, ...]
    is_eccentric: bool
    is_sphere_regular: bool
    is_distance_regular: bool
    # None when n exceeds the vertex-transitivity cap
    is_vertex_transitive: bool | None
    sphere_profile: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        d = asdict(self)
        d["leaf_set"] = list(self.leaf_set)
        d["global_antipode"] = list(self.global_antipode)
        d["sphere_profile"] = [list(p) for p in self.sphere_profile]
        if self.is_vertex_transitive is None:
            d["is_vertex_transitive"] = "not computed"
        return d


def classify(g: Graph, vt_cap: int = DEFAULT_VT_CAP) -> Classification:
    dt = g.distance_table
    ant = global_antipode(g)
    profile = sphere_profile(g)
    sphere_regular = len(set(profile)) == 1
    # distance regularity and vertex transitivity both imply sphere regularity
    distance_regular = sphere_regular and is_distance_regular(g)
    if not sphere_regular:
        vt: bool | None = False
    elif g.n > vt_cap:
        vt = None
    else:
        vt = is_vertex_transitive(g, vt_cap)
    return Classification(
        n=g.n,
        m=g.m,
        radius=dt.radius,
        diameter=dt.diameter,
        is_tree=is_tree(g),
        leaf_set=leaves(g),
        is_gag=len(ant) < g.n,
        global_antipode=ant,
        is_eccentric=dt.radius < dt.diameter,
        is_sphere_regular=sphere_regular,
        is_distance_regular=distance_regular,
        is_vertex_transitive=vt,
        sphere_profile=profile,
    )

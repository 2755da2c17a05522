"""Pure-Python implementations of the hot kernels.

These are the reference versions of the routines in ``_ckernels.pyx``; the
two must agree bit for bit.  :mod:`gagmax.kernels` picks one at import.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

MAX_CANON_N = 64


def bfs_all_pairs(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    """All-pairs BFS distances on a CSR adjacency; unreachable pairs are -1."""
    nbrs = [indices[indptr[v]:indptr[v + 1]].tolist() for v in range(n)]
    out = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in nbrs[u]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        out[s] = dist
    return out


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    # Equitable refinement; fragments are ordered by neighbour count so the
    # result is equivariant under relabelling.
    qi = 0
    n_cells = len(cells)
    n = sum(len(c) for c in cells)
    while qi < len(splitters) and n_cells < n:
        sp = splitters[qi]
        qi += 1
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & sp).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            for k in sorted(groups):
                frag = groups[k]
                new_cells.append(frag)
                m = 0
                for v in frag:
                    m |= 1 << v
                splitters.append(m)
            n_cells += len(groups) - 1
        cells = new_cells
    return cells


class _Search:
    __slots__ = ("adj", "autos", "best", "first", "n")

    def __init__(self, adj: Sequence[int], n: int) -> None:
        self.adj = adj
        self.n = n
        self.first: tuple | None = None  # (cert, order, path)
        self.best: tuple | None = None
        self.autos: list[list[int]] = []

    def leaf(self, cells: list[list[int]], path: list[int]) -> int:
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.adj
        rows = []
        for v in order:
            m = adj[v]
            r = 0
            while m:
                low = m & -m
                r |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows.append(r)
        cert = tuple(rows)
        if self.first is None:
            self.first = self.best = (cert, order, list(path))
            return -1
        for ref in (self.first, self.best):
            if cert == ref[0]:
                gamma = [0] * self.n
                for a, b in zip(ref[1], order):
                    gamma[a] = b
                self.autos.append(gamma)
                ref_path = ref[2]
                k = 0
                while k < len(path) and path[k] == ref_path[k]:
                    k += 1
                return k
        if cert > self.best[0]:
            self.best = (cert, order, list(path))
        return -1

    def stab_orbit_root(self, path: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[v] == v for v in path):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def run(self, cells: list[list[int]], path: list[int]) -> int:
        if len(cells) == self.n:
            return self.leaf(cells, path)
        ti = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (ti < 0 or len(c) < len(cells[ti])):
                ti = i
        target = cells[ti]
        depth = len(path)
        tried_roots: set[int] = set()
        for v in target:
            if tried_roots:
                roots = self.stab_orbit_root(path)
                if roots[v] in {roots[u] for u in tried_roots}:
                    continue
            child = cells[:ti] + [[v], [u for u in target if u != v]] + cells[ti + 1:]
            child = _refine(self.adj, child, [1 << v])
            path.append(v)
            r = self.run(child, path)
            path.pop()
            tried_roots.add(v)
            if r >= 0 and r < depth:
                return r
        return -1


def canonical_labeling(
    masks: Sequence[int], n: int, colors: Sequence[int] | None = None
) -> tuple[tuple[int, ...], list[int]]:
    """Canonical relabelling of a graph given as neighbour bitmasks.

    Returns ``(rows, pos)``: ``rows[i]`` is the neighbour mask of canonical
    vertex ``i`` and ``pos[v]`` the canonical index of input vertex ``v``.
    Two inputs get equal ``rows`` iff they are isomorphic (respecting the
    ordered colour classes when ``colors`` is given).
    """
    if n > MAX_CANON_N:
        raise ValueError(f"canonical labelling supports n <= {MAX_CANON_N}")
    if n == 0:
        return (), []
    adj = list(masks)
    if colors is None:
        cells = [list(range(n))]
    else:
        by: dict[int, list[int]] = {}
        for v in range(n):
            by.setdefault(colors[v], []).append(v)
        cells = [by[k] for k in sorted(by)]
    splitters = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        splitters.append(m)
    cells = _refine(adj, cells, splitters)
    s = _Search(adj, n)
    s.run(cells, [])
    cert, order, _ = s.best
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    return cert, pos

"""Isomorph-free generation of connected graphs by canonical augmentation.

Graphs grow one vertex at a time.  A child ``H = G + v`` is kept only when
``v`` is the canonical deletion vertex of ``H``: among the non-cut vertices
with the largest ``(degree, neighbour-degree sum)`` invariant, the one with
the highest canonical label, up to automorphisms of ``H``.  Every connected
graph has a non-cut vertex, so each isomorphism class is reached from
exactly one parent class; siblings produced by automorphic neighbourhoods
are merged by canonical form.

Emitted graphs are canonically labelled, so ``emit_graph6(g)`` is also
their canonical form.
"""

from __future__ import annotations

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from gagmax import kernels
from gagmax.canon import same_orbit
from gagmax.errors import CapExceeded
from gagmax.graph import Graph, masks_to_graph6

DEFAULT_ENUM_CAP = 10
HARD_ENUM_CAP = 12


@dataclass(frozen=True)
class EnumFilter:
    max_vertices: int
    min_vertices: int = 1
    max_edges: int | None = None
    regular_only: bool = False
    degree: int | None = None
    min_degree: int | None = None
    trees_only: bool = False
    # permits max_vertices up to HARD_ENUM_CAP; can run for a long time
    allow_large: bool = False

    def __post_init__(self) -> None:
        cap = HARD_ENUM_CAP if self.allow_large else DEFAULT_ENUM_CAP
        if self.max_vertices > cap:
            raise CapExceeded(f"max_vertices={self.max_vertices} exceeds the enumeration cap {cap}")
        if self.max_vertices < 1 or self.min_vertices < 1:
            raise ValueError("vertex bounds must be positive")
        if self.degree is not None and not self.regular_only:
            raise ValueError("degree is only meaningful with regular_only")

    def accepts(self, masks: tuple[int, ...]) -> bool:
        n = len(masks)
        if n < self.min_vertices:
            return False
        degs = [m.bit_count() for m in masks]
        edges = sum(degs) // 2
        if self.max_edges is not None and edges > self.max_edges:
            return False
        if self.trees_only and edges != n - 1:
            return False
        if self.min_degree is not None and n > 1 and min(degs) < self.min_degree:
            return False
        if self.min_degree is not None and n == 1 and self.min_degree > 0:
            return False
        if self.regular_only:
            if len(set(degs)) != 1:
                return False
            if self.degree is not None and degs[0] != self.degree:
                return False
        return True


@dataclass(frozen=True)
class _Plan:
    """One augmentation tree: grow to ``target`` vertices under the pruning rules."""

    target: int
    max_edges: int | None
    trees_only: bool
    degree: int | None  # regular degree when growing toward a k-regular graph

    def feasible(self, masks: tuple[int, ...]) -> bool:
        n = len(masks)
        if self.max_edges is not None and sum(m.bit_count() for m in masks) // 2 > self.max_edges:
            return False
        k = self.degree
        if k is None:
            return True
        r = self.target - n
        total = 0
        for m in masks:
            d = k - m.bit_count()
            if d < 0 or d > r:
                return False
            total += d
        # the r missing vertices supply k*r endpoints, 2 per edge among themselves
        return k * r - r * (r - 1) <= total <= k * r and (k * r - total) % 2 == 0


def _non_cut(masks: list[int], n: int) -> list[int]:
    full = (1 << n) - 1
    out = []
    for v in range(n):
        rest = full & ~(1 << v)
        if not rest:
            out.append(v)
            continue
        start = rest & -rest
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = masks[low.bit_length() - 1] & rest & ~seen
            seen |= nb
            frontier |= nb
        if seen == rest:
            out.append(v)
    return out


def _children(masks: tuple[int, ...], plan: _Plan) -> list[tuple[int, ...]]:
    n = len(masks)
    new = n
    seen: set[tuple[int, ...]] = set()
    out = []
    for S in range(1, 1 << n):
        if plan.trees_only and S & (S - 1):
            continue
        child = list(masks)
        s = S
        while s:
            low = s & -s
            child[low.bit_length() - 1] |= 1 << new
            s ^= low
        child.append(S)
        child_t = tuple(child)
        if not plan.feasible(child_t):
            continue
        degs = [m.bit_count() for m in child]
        inv = [(degs[v], sum(degs[u] for u in _bits(child[v]))) for v in range(n + 1)]
        cands = _non_cut(child, n + 1)
        top = max(inv[v] for v in cands)
        if inv[new] != top:
            continue
        rows, pos = kernels.canonical_labeling(child, n + 1)
        w = max((v for v in cands if inv[v] == top), key=lambda v: pos[v])
        if w != new and not same_orbit(child, n + 1, w, new):
            continue
        if rows in seen:
            continue
        seen.add(rows)
        out.append(rows)
    return out


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _grow(root: tuple[int, ...], plan: _Plan, flt: EnumFilter) -> list[tuple[int, ...]]:
    found = []
    stack = [root]
    while stack:
        masks = stack.pop()
        if flt.accepts(masks):
            found.append(masks)
        if len(masks) < plan.target:
            stack.extend(_children(masks, plan))
    return found


def _grow_job(args) -> list[tuple[int, ...]]:
    return _grow(*args)


def _plans(flt: EnumFilter) -> list[_Plan]:
    if not flt.regular_only:
        return [_Plan(flt.max_vertices, flt.max_edges, flt.trees_only, None)]
    plans = []
    for T in range(flt.min_vertices, flt.max_vertices + 1):
        degrees = [flt.degree] if flt.degree is not None else range(T)
        for k in degrees:
            if k < 0 or k >= T or (T * k) % 2:
                continue
            if flt.min_degree is not None and k < flt.min_degree:
                continue
            if flt.max_edges is not None and T * k // 2 > flt.max_edges:
                continue
            plans.append(_Plan(T, flt.max_edges, flt.trees_only, k))
    return plans


def enumerate_masks(flt: EnumFilter, workers: int = 1) -> list[tuple[int, ...]]:
    """Canonical neighbour-mask tuples of every class passing ``flt``, sorted by (n, graph6)."""
    results: list[tuple[int, ...]] = []
    jobs = []
    for plan in _plans(flt):
        local = flt if plan.degree is None else _PlanFilter(flt, plan.target)
        root = (0,)
        if not plan.feasible(root):
            continue
        # split the tree at its first levels so branches can run in parallel
        frontier = [root]
        while frontier and len(frontier) < 4 * max(workers, 1) and len(frontier[0]) < min(plan.target, 4):
            nxt = []
            for masks in frontier:
                if local.accepts(masks):
                    results.append(masks)
                nxt.extend(_children(masks, plan))
            frontier = nxt
        jobs.extend((masks, plan, local) for masks in frontier)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_grow_job, jobs):
                results.extend(part)
    else:
        for job in jobs:
            results.extend(_grow(*job))
    keyed = {masks_to_graph6(m, len(m)): m for m in results}
    return [keyed[k] for k in sorted(keyed, key=lambda s: (len(keyed[s]), s))]


@dataclass(frozen=True)
class _PlanFilter:
    flt: EnumFilter
    target: int

    def accepts(self, masks: tuple[int, ...]) -> bool:
        return len(masks) == self.target and self.flt.accepts(masks)


def enumerate_connected(flt: EnumFilter, workers: int = 1) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class passing ``flt``.

    Output is ordered by vertex count, then by graph6 text.
    """
    for masks in enumerate_masks(flt, workers):
        yield Graph.from_masks(masks)

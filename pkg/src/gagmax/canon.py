"""Canonical forms, isomorphism tests and vertex orbits.

All of these reduce to :func:`gagmax.kernels.canonical_labeling`, an
individualization/refinement search with automorphism pruning.  Orbits are
decided exactly: ``u`` and ``v`` share an orbit iff the graph with ``u``
distinguished and the graph with ``v`` distinguished have equal canonical
forms.
"""

from __future__ import annotations

from collections.abc import Sequence

from gagmax import kernels
from gagmax.errors import CapExceeded
from gagmax.graph import Graph, masks_to_graph6

DEFAULT_VT_CAP = 12


def canonical_rows(masks: Sequence[int], n: int, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    return kernels.canonical_labeling(masks, n, colors)[0]


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph (equal iff isomorphic)."""
    rows = canonical_rows(g.masks, g.n)
    return masks_to_graph6(rows, g.n).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    _, pos = kernels.canonical_labeling(g.masks, g.n)
    return g.relabel(pos)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_rows(g.masks, g.n) == canonical_rows(h.masks, h.n)


def _marked(masks: Sequence[int], n: int, v: int) -> tuple[int, ...]:
    colors = [0] * n
    colors[v] = 1
    return canonical_rows(masks, n, colors)


def same_orbit(masks: Sequence[int], n: int, u: int, v: int) -> bool:
    """True iff some automorphism maps ``u`` to ``v``."""
    if u == v:
        return True
    if masks[u].bit_count() != masks[v].bit_count():
        return False
    return _marked(masks, n, u) == _marked(masks, n, v)


def vertex_orbits(g: Graph) -> list[tuple[int, ...]]:
    """Automorphism orbits, each sorted, ordered by smallest member."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(_marked(g.masks, g.n, v), []).append(v)
    return sorted(tuple(vs) for vs in groups.values())


def is_vertex_transitive(g: Graph, cap: int = DEFAULT_VT_CAP) -> bool:
    if g.n > cap:
        raise CapExceeded(f"vertex-transitivity check capped at n={cap}, got n={g.n}")
    if len(set(g.degrees)) > 1:
        return False
    ref = _marked(g.masks, g.n, 0)
    return all(_marked(g.masks, g.n, v) == ref for v in range(1, g.n))

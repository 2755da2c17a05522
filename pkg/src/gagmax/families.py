"""Named graphs used throughout the docs, tests and CLI."""

from __future__ import annotations

import re
from collections.abc import Callable

from gagmax.graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], f"K1,{leaves}")


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def hypercube(dim: int) -> Graph:
    n = 1 << dim
    return Graph.from_edges(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(dim) if v < v ^ (1 << k)], f"Q{dim}")


def kite() -> Graph:
    """Triangle 0,1,2 with a pendant vertex 3 on vertex 2."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)], "kite")


def hourglass() -> Graph:
    """Two triangles sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)], "hourglass")


def spider() -> Graph:
    """Path 0-1-2-3-4 with an extra leaf 5 on vertex 2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], "spider")


def regular_gag_a() -> Graph:
    """3-regular GAG on 10 vertices with radius 2, diameter 3, |ant| = 9.

    Vertex 0 is the hub; its neighbours 1, 2, 3 each carry two vertices of
    an outer 6-cycle.
    """
    a, b, c, d, e, f, g, h, i, j = range(10)
    edges = [
        (a, b), (a, c), (a, d), (d, i), (d, j), (b, e), (b, f), (c, h), (c, g),
        (e, f), (f, h), (h, g), (g, j), (j, i), (i, e),
    ]
    return Graph.from_edges(10, edges, "regular-gag-a")


def regular_gag_b() -> Graph:
    """3-regular GAG on 10 vertices with radius 3, diameter 5, |ant| = 4.

    Two copies of K_4 minus an edge, joined through a bridge path.
    """
    a, b, c, d, e, f, g, h, i, j = range(10)
    edges = [
        (a, b), (a, d), (a, e), (b, e), (b, d), (c, d), (c, e), (c, g),
        (f, i), (f, h), (f, j), (g, i), (g, j), (h, i), (h, j),
    ]
    return Graph.from_edges(10, edges, "regular-gag-b")


NAMED: dict[str, Callable[[], Graph]] = {
    "kite": kite,
    "hourglass": hourglass,
    "spider": spider,
    "regular-gag-a": regular_gag_a,
    "regular-gag-b": regular_gag_b,
}


def by_name(name: str) -> Graph | None:
    """Resolve names like ``kite``, ``P4``, ``C6``, ``K3``, ``K3,3``, ``K1,6``, ``Q3``."""
    key = name.strip()
    if key.lower() in NAMED:
        return NAMED[key.lower()]()
    m = re.fullmatch(r"([PCKQ])(\d+)(?:,(\d+))?", key)
    if not m:
        return None
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "K":
            return None
        b = int(b)
        return star(b) if a == 1 else complete_bipartite(a, b)
    if a < 1 or (kind == "C" and a < 3):
        return None
    return {"P": path, "C": cycle, "K": complete, "Q": hypercube}[kind](a)


def fixture_set() -> list[Graph]:
    """The six base graphs the product and bound checks iterate over."""
    return [path(3), path(4), kite(), hourglass(), spider(), star(3)]

"""Graph type and text formats (graph6 short form, edge-list literals)."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from gagmax.errors import DisconnectedGraphError, Graph6Error, GraphError

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    """Finite simple connected undirected graph on vertices ``0..n-1``.

    Instances are immutable; derived data (bitmasks, CSR arrays, the
    distance table) is computed lazily and cached on first use.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex index {u} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.n:
            raise DisconnectedGraphError()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs), label)

    @classmethod
    def from_masks(cls, masks: Sequence[int], label: str | None = None) -> Graph:
        n = len(masks)
        rows = []
        for m in masks:
            row = []
            while m:
                low = m & -m
                row.append(low.bit_length() - 1)
                m ^= low
            rows.append(frozenset(row))
        return cls(n, tuple(rows), label)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), self.label)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for nbrs in self.adj:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(self.degrees)
        indices = np.fromiter(
            (u for nbrs in self.adj for u in sorted(nbrs)), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def distance_table(self):
        from gagmax.metric import _compute_distances

        return _compute_distances(self)

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.m}>"


# -- graph6 -----------------------------------------------------------------


def masks_to_graph6(masks: Sequence[int], n: int) -> str:
    """graph6 text for a graph given as neighbour bitmasks (no validation)."""
    if not 0 <= n <= GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 short form holds 0..{GRAPH6_MAX_N} vertices, got {n}")
    bits = []
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            bits.append((mj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def emit_graph6(g: Graph) -> str:
    return masks_to_graph6(g.masks, g.n)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short form, 1 <= n <= 62)."""
    s = text.strip()
    s = s.removeprefix(">>graph6<<")
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("n > 62 (long graph6 form) is not supported")
    if n == 0:
        raise Graph6Error("graph6 encodes the empty graph; at least one vertex is required")
    nbits = n * (n - 1) // 2
    data = s[1:]
    if len(data) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 length mismatch: n={n} needs {(nbits + 5) // 6} data bytes, got {len(data)}")
    value = 0
    for ch in data:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * len(data) - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero trailing pad bits")
    value >>= pad
    edges = []
    # the first pair (0,1) is the most significant bit
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (value >> (nbits - 1 - idx)) & 1:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


# -- edge-list literals -------------------------------------------------------

_EDGE_LIST = re.compile(r"^\s*n\s*=\s*(\d+)\s*(?:;\s*(.*))?$", re.DOTALL)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n=4; 0-1 1-2 2-0 2-3"`` (edges separated by spaces or commas)."""
    match = _EDGE_LIST.match(text.strip())
    if not match:
        raise GraphError(f"not an edge-list literal: {text!r}")
    n = int(match.group(1))
    edges = []
    for tok in re.split(r"[\s,]+", (match.group(2) or "").strip()):
        if not tok:
            continue
        parts = tok.split("-")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"bad edge token {tok!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return f"n={g.n}; " + " ".join(f"{u}-{v}" for u, v in g.edges)

"""Exact spherical and ball maximal operators.

Everything here is exact: functions take rational values, sphere sums are
accumulated as integers after clearing denominators, and averages are
compared by cross-multiplication.  Functions are real-valued; for the norms
computed in this package a nonnegative extremizer always exists, since
``|avg f| <= avg |f|``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from gagmax.errors import BudgetExceeded, EmptySphereError
from gagmax.graph import Graph
from gagmax.product import (
    PowerGraph,
    Profile,
    poly_mul,
    poly_pow,
    profile_count,
    profiles,
)

PROFILE_BUDGET = 2_000_000
_INT64_SAFE = 1 << 62


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError("vertex function values must be finite")
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, complex):
        raise TypeError("complex-valued functions are not supported; pass |f| instead")
    raise TypeError(f"cannot interpret {v!r} as a rational value")


@dataclass(frozen=True)
class VertexFunction:
    """Exact rational values on vertices ``0..n-1``."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable) -> None:
        object.__setattr__(self, "values", tuple(_to_fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: VertexFunction) -> VertexFunction:
        return VertexFunction(a + b for a, b in zip(self.values, other.values, strict=True))

    def scale(self, c) -> VertexFunction:
        c = _to_fraction(c)
        return VertexFunction(c * v for v in self.values)

    def abs(self) -> VertexFunction:
        return VertexFunction(abs(v) for v in self.values)

    def max_abs(self) -> Fraction:
        return max(abs(v) for v in self.values)

    @classmethod
    def constant(cls, n: int, c=1) -> VertexFunction:
        return cls([c] * n)

    @classmethod
    def indicator(cls, n: int, members: Iterable[int]) -> VertexFunction:
        s = set(members)
        return cls(1 if v in s else 0 for v in range(n))

    @classmethod
    def delta(cls, n: int, y: int) -> VertexFunction:
        return cls.indicator(n, [y])

    def to_json(self) -> list[str]:
        return [f"{v.numerator}/{v.denominator}" for v in self.values]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> VertexFunction:
        return cls(Fraction(s) for s in data)


@dataclass(frozen=True)
class MaximalResult:
    Mf: VertexFunction
    argmax_radius: tuple[int, ...]


def _scaled_ints(f: VertexFunction) -> tuple[list[int], int]:
    scale = 1
    for v in f.values:
        scale = math.lcm(scale, v.denominator)
    return [int(v * scale) for v in f.values], scale


def _shell_sums(g: Graph, ints: list[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Per vertex ``x``: integer sums of ``ints`` over ``S_r(x)`` and the sizes ``|S_r(x)|``."""
    dt = g.distance_table
    D = dt.dist
    n = g.n
    radii = dt.diameter + 1
    sums: list[list[int]] = []
    sizes: list[list[int]] = []
    if max((abs(v) for v in ints), default=0) * n < _INT64_SAFE:
        F = np.asarray(ints, dtype=np.int64)
        chunk = max(1, 4_000_000 // max(n, 1))
        for lo in range(0, n, chunk):
            block = D[lo:lo + chunk]
            S = np.zeros((block.shape[0], radii), dtype=np.int64)
            C = np.zeros((block.shape[0], radii), dtype=np.int64)
            for r in range(radii):
                mask = block == r
                S[:, r] = mask.astype(np.int64) @ F
                C[:, r] = mask.sum(axis=1)
            sums.extend(S.tolist())
            sizes.extend(C.tolist())
    else:
        for x in range(n):
            s = [0] * radii
            c = [0] * radii
            for y, r in enumerate(D[x].tolist()):
                s[r] += ints[y]
                c[r] += 1
            sums.append(s)
            sizes.append(c)
    return sums, sizes


def _best_ratio(nums: Sequence[int], dens: Sequence[int]) -> tuple[int, int, int]:
    """Largest ``|num|/den`` over entries with ``den > 0``; ties go to the smallest index."""
    bn, bd, br = -1, 1, -1
    for r, (a, s) in enumerate(zip(nums, dens)):
        if s == 0:
            continue
        a = abs(a)
        if a * bd > bn * s:
            bn, bd, br = a, s, r
    return bn, bd, br


def sphere_average(g: Graph, f: VertexFunction, x: int, r: int) -> Fraction:
    if len(f) != g.n:
        raise ValueError("function length does not match the graph")
    if r < 0 or r > g.distance_table.ecc[x]:
        raise EmptySphereError()
    row = g.distance_table.dist[x]
    members = np.flatnonzero(row == r).tolist()
    return sum((f[y] for y in members), Fraction(0)) / len(members)


def maximal_function(g: Graph, f: VertexFunction) -> MaximalResult:
    """``Mf(x) = max_r |avg_{S_r(x)} f|`` over nonempty spheres."""
    if len(f) != g.n:
        raise ValueError("function length does not match the graph")
    ints, scale = _scaled_ints(f)
    sums, sizes = _shell_sums(g, ints)
    vals = []
    arg = []
    for s, c in zip(sums, sizes):
        num, den, r = _best_ratio(s, c)
        vals.append(Fraction(num, den * scale))
        arg.append(r)
    return MaximalResult(VertexFunction(vals), tuple(arg))


def ball_maximal_function(g: Graph, f: VertexFunction) -> MaximalResult:
    """Same as :func:`maximal_function` with balls ``B_r(x)`` in place of spheres."""
    if len(f) != g.n:
        raise ValueError("function length does not match the graph")
    ints, scale = _scaled_ints(f)
    sums, sizes = _shell_sums(g, ints)
    ecc = g.distance_table.ecc
    vals = []
    arg = []
    for x, (s, c) in enumerate(zip(sums, sizes)):
        cs = list(itertools.accumulate(s[: ecc[x] + 1]))
        cc = list(itertools.accumulate(c[: ecc[x] + 1]))
        num, den, r = _best_ratio(cs, cc)
        vals.append(Fraction(num, den * scale))
        arg.append(r)
    return MaximalResult(VertexFunction(vals), tuple(arg))


def parse_p(p) -> float | int:
    """Normalize an exponent: a positive number, or ``math.inf`` for ``'inf'``."""
    if isinstance(p, str):
        s = p.strip().lower()
        if s in ("inf", "infinity", "oo"):
            return math.inf
        p = float(s)
        if p.is_integer():
            p = int(p)
    if isinstance(p, float) and p.is_integer():
        p = int(p)
    return p


def lp_norm(f: VertexFunction, p) -> Fraction:
    """``sum |f|^p`` for integer ``p >= 1`` (the p-th power), or ``max |f|`` for infinity."""
    p = parse_p(p)
    if p == math.inf:
        return f.max_abs()
    if p < 1:
        raise ValueError("p must be >= 1")
    if not isinstance(p, int):
        raise ValueError("exact l^p norms need an integer exponent (or infinity)")
    return sum((abs(v) ** p for v in f.values), Fraction(0))


@dataclass(frozen=True)
class ProfileValue:
    profile: Profile
    orbit: int
    value: Fraction
    radius: int

    def to_json(self) -> dict:
        return {
            "counts": list(self.profile.counts),
            "orbit": self.orbit,
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "radius": self.radius,
        }


def power_maximal_symmetric(
    pg: PowerGraph, base_set: Iterable[int], budget: int = PROFILE_BUDGET
) -> list[ProfileValue]:
    """``M(1_{B^N})`` on ``base^N`` evaluated once per profile, without materializing.

    With ``P_v`` the sphere-size polynomial of ``v`` and ``Q_v`` the same
    polynomial counting only members of ``B``, the sphere about ``x`` of
    radius ``r`` has ``[t^r] prod P_{x_k}`` vertices, of which
    ``[t^r] prod Q_{x_k}`` lie in ``B^N``.
    """
    B = set(base_set)
    m = pg.base.n
    if not B <= set(range(m)):
        raise ValueError("base_set must be a subset of the base vertices")
    count = profile_count(m, pg.N)
    if count > budget:
        raise BudgetExceeded(f"{count} profiles exceed the profile budget {budget}")
    D = pg.base_distances.dist
    P = pg.base_sphere_polys
    Q = []
    for v in range(m):
        q = [0] * len(P[v])
        for y in B:
            q[int(D[v, y])] += 1
        Q.append(tuple(q))
    # cache powers per base vertex; profiles reuse them heavily
    ppow: dict[tuple[int, int], list[int]] = {}
    qpow: dict[tuple[int, int], list[int]] = {}
    out = []
    for prof, orbit in profiles(pg):
        tot = [1]
        hit = [1]
        for v, c in enumerate(prof.counts):
            if c:
                if (v, c) not in ppow:
                    ppow[v, c] = poly_pow(P[v], c)
                    qpow[v, c] = poly_pow(Q[v], c)
                tot = poly_mul(tot, ppow[v, c])
                hit = poly_mul(hit, qpow[v, c])
        num, den, r = _best_ratio(hit, tot)
        out.append(ProfileValue(prof, orbit, Fraction(num, den), r))
    return out

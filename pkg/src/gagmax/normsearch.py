"""Certified lower bounds on ``||M||_p`` by nonnegative multistart ascent.

Restricting to ``f >= 0`` loses nothing because ``Mf <= M|f|`` pointwise.
On the nonnegative cone ``Mf = max_sigma A_sigma f`` where ``sigma`` picks
one radius per vertex and ``A_sigma`` is the corresponding row-stochastic
averaging matrix.  Each ascent step fixes the maximizing pattern at the
current iterate and applies one nonnegative power-method step for the
p-norm of ``A_sigma``:

    z = A_sigma^T (A_sigma f)^(p-1),   f <- z^(1/(p-1)) / ||.||_p

For nonnegative matrices this step never decreases ``||A f||_p / ||f||_p``
(Hölder), and re-deriving ``sigma`` can only increase ``||Mf||_p``, so the
ratio is monotone up to rounding.  Steps that fail to improve are
rejected, which ends the restart.

Float iterates are only a search device.  Each restart's final iterate is
rationalized and re-evaluated exactly through :mod:`gagmax.maximal`; only
revalidated numbers are reported.  For non-integer ``p`` the revalidation
is a rigorous rational lower bound from outward-rounded interval
arithmetic instead of an exact rational.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
from scipy import sparse

from gagmax.errors import BudgetExceeded
from gagmax.graph import Graph
from gagmax.maximal import VertexFunction, lp_norm, maximal_function, parse_p
from gagmax.metric import global_antipode

PATTERN_BUDGET = 100_000
_IV_PREC = 128


@dataclass(frozen=True)
class SearchConfig:
    p: float
    restarts: int = 64
    max_iters: int = 500
    tol: float = 1e-12
    seed: int = 0
    max_denominator: int = 10**6
    # revalidate every iterate exactly and use exact values for acceptance
    exact_steps: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        p = parse_p(self.p)
        if not (p > 1 and p != math.inf):
            raise ValueError("norm search needs 1 < p < inf; use l1_norm_exact for p = 1 and 1 for p = inf")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iters < 0:
            raise ValueError("max_iters must be >= 0")


@dataclass
class RestartTrace:
    seed_kind: str
    ratios: list[float] = field(default_factory=list)
    exact_ratios: list[Fraction] | None = None
    witness: VertexFunction | None = None
    exact: Fraction | None = None


@dataclass
class SearchResult:
    p: float | int
    best_ratio_pth_power: float
    exact: Fraction
    exact_kind: str  # "exact" or "certified-lower"
    witness: VertexFunction
    pattern: tuple[int, ...]
    seed_kind: str
    trajectories: list[RestartTrace]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "approx_best_ratio_pth_power": self.best_ratio_pth_power,
            "value_pth_power": f"{self.exact.numerator}/{self.exact.denominator}",
            "value_kind": self.exact_kind,
            "approx_value_pth_power": float(self.exact),
            "seed": self.seed_kind,
            "witness": self.witness.to_json(),
            "pattern": list(self.pattern),
            "restarts": len(self.trajectories),
            "approx_trajectory_lengths": [len(t.ratios) for t in self.trajectories],
        }


# -- exact and certified evaluation ---------------------------------------------


def _p_rational(p) -> Fraction:
    # decimal exponents are read as written: "1.01" means 101/100
    return Fraction(str(p)) if isinstance(p, float) else Fraction(p)


def _iv_pow_sum(values: list[Fraction], p: Fraction):
    iv = mpmath.iv
    pe = iv.mpf(p.numerator) / iv.mpf(p.denominator)
    total = iv.mpf(0)
    for v in values:
        if v == 0:
            continue
        x = iv.mpf(v.numerator) / iv.mpf(v.denominator)
        total += iv.exp(pe * iv.log(x))
    return total


def _mpf_to_fraction(x) -> Fraction:
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(man) * (Fraction(2) ** exp)


def ratio_from_values(Mf: VertexFunction, f: VertexFunction, p) -> tuple[Fraction, str]:
    """``||Mf||_p^p / ||f||_p^p`` exactly (integer p) or as a certified lower bound."""
    p = parse_p(p)
    if isinstance(p, int):
        return lp_norm(Mf, p) / lp_norm(f, p), "exact"
    pr = _p_rational(p)
    with mpmath.workprec(_IV_PREC):
        mpmath.iv.prec = _IV_PREC
        num = _iv_pow_sum([abs(v) for v in Mf.values], pr)
        den = _iv_pow_sum([abs(v) for v in f.values], pr)
        q = num / den
        lower = _mpf_to_fraction(q.a)
    return lower, "certified-lower"


def validate_witness(g: Graph, p, f: VertexFunction) -> Fraction:
    """``||Mf||_p^p / ||f||_p^p`` for ``f >= 0``; an unconditional lower bound on ``||M||_p^p``.

    Exact for integer ``p``; for other ``p`` a rigorous rational lower bound.
    """
    if len(f) != g.n:
        raise ValueError("function length does not match the graph")
    if any(v < 0 for v in f.values):
        raise ValueError("witness must be nonnegative")
    if all(v == 0 for v in f.values):
        raise ValueError("witness must be nonzero")
    return ratio_from_values(maximal_function(g, f).Mf, f, p)[0]


# -- float machinery -----------------------------------------------------------


class _Operator:
    """Stacked sphere-averaging operators: row ``r*n + x`` averages over ``S_r(x)``."""

    def __init__(self, g: Graph) -> None:
        dt = g.distance_table
        n = g.n
        R = dt.diameter + 1
        D = np.asarray(dt.dist, dtype=np.int64)
        sizes = np.zeros((n, R), dtype=np.int64)
        np.add.at(sizes, (np.repeat(np.arange(n), n), D.ravel()), 1)
        rows = (D * n + np.arange(n)[:, None]).ravel()
        cols = np.tile(np.arange(n), n)
        vals = 1.0 / sizes[np.repeat(np.arange(n), n), D.ravel()]
        self.n = n
        self.R = R
        self.stack = sparse.csr_matrix((vals, (rows, cols)), shape=(R * n, n))

    def apply(self, f: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        Y = (self.stack @ f).reshape(self.R, self.n)
        sigma = Y.argmax(axis=0)
        return Y[sigma, np.arange(self.n)], sigma

    def pattern_matrix(self, sigma: np.ndarray) -> sparse.csr_matrix:
        return self.stack[sigma * self.n + np.arange(self.n)]


def _float_ratio(op: _Operator, f: np.ndarray, p: float) -> float:
    Mf, _ = op.apply(f)
    return float(np.sum(Mf**p) / np.sum(f**p))


def _power_step(op: _Operator, f: np.ndarray, p: float) -> np.ndarray:
    _, sigma = op.apply(f)
    A = op.pattern_matrix(sigma)
    y = A @ f
    z = A.T @ (y ** (p - 1.0))
    zmax = z.max()
    if zmax <= 0:
        return f
    out = (z / zmax) ** (1.0 / (p - 1.0))
    return out / np.sum(out**p) ** (1.0 / p)


def _rationalize(f: np.ndarray, max_den: int) -> VertexFunction:
    top = f.max()
    return VertexFunction(Fraction(float(v / top)).limit_denominator(max_den) for v in f)


def _run_restart(g: Graph, cfg: SearchConfig, kind: str, f0: np.ndarray) -> RestartTrace:
    p = float(parse_p(cfg.p))
    op = _Operator(g)
    trace = RestartTrace(kind)
    f = f0 / np.sum(f0**p) ** (1.0 / p)
    cur = _float_ratio(op, f, p)
    trace.ratios.append(cur)
    if cfg.exact_steps:
        wit = _rationalize(f, cfg.max_denominator)
        cur_exact = validate_witness(g, cfg.p, wit)
        trace.exact_ratios = [cur_exact]
    for _ in range(cfg.max_iters):
        nxt = _power_step(op, f, p)
        val = _float_ratio(op, nxt, p)
        if cfg.exact_steps:
            wit = _rationalize(nxt, cfg.max_denominator)
            val_exact = validate_witness(g, cfg.p, wit)
            if val_exact < cur_exact:
                break
        elif not val >= cur:
            break
        improved = val - cur
        f, cur = nxt, val
        trace.ratios.append(cur)
        if cfg.exact_steps:
            cur_exact = val_exact
            trace.exact_ratios.append(cur_exact)
        if improved <= cfg.tol * abs(cur):
            break
    trace.witness = _rationalize(f, cfg.max_denominator)
    trace.exact = validate_witness(g, cfg.p, trace.witness)
    return trace


def _seeds(g: Graph, cfg: SearchConfig) -> list[tuple[str, np.ndarray]]:
    n = g.n
    seeds = [("constant", np.ones(n))]
    ant = global_antipode(g)
    if len(ant) < n:
        ind = np.zeros(n)
        ind[list(ant)] = 1.0
        seeds.append(("antipode-indicator", ind))
    for y in range(n):
        d = np.zeros(n)
        d[y] = 1.0
        seeds.append((f"delta:{y}", d))
    for i in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, i])
        seeds.append((f"random:{i}", rng.random(n) + 1e-12))
    return seeds


def _restart_job(args):
    g, cfg, kind, f0 = args
    return _run_restart(g, cfg, kind, f0)


def estimate_norm(g: Graph, cfg: SearchConfig) -> SearchResult:
    """Best revalidated ratio ``||Mf||_p^p / ||f||_p^p`` over all restarts.

    Deterministic seeds (``f = 1``, ``1_{ant G}`` when ``G`` is a GAG, and
    every delta mass) always run, and their exact starting values count as
    candidates, so the result dominates those closed-form witnesses.
    """
    if not isinstance(g, Graph):
        raise TypeError("estimate_norm needs a materialized Graph; call PowerGraph.materialize() first")
    p = parse_p(cfg.p)
    seeds = _seeds(g, cfg)
    jobs = [(g, cfg, kind, f0) for kind, f0 in seeds]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            traces = list(pool.map(_restart_job, jobs))
    else:
        traces = [_restart_job(j) for j in jobs]

    candidates: list[tuple[Fraction, int, str, VertexFunction]] = []
    for i, ((kind, f0), tr) in enumerate(zip(seeds, traces)):
        start = _rationalize(f0, cfg.max_denominator)
        candidates.append((validate_witness(g, p, start), i, kind, start))
        candidates.append((tr.exact, i, kind, tr.witness))
    # highest value; earliest seed on ties keeps the choice deterministic
    best_val, _, best_kind, best_f = max(candidates, key=lambda c: (c[0], -c[1]))
    res = maximal_function(g, best_f)
    float_f = np.array([float(v) for v in best_f.values])
    approx = _float_ratio(_Operator(g), float_f, float(p))
    return SearchResult(
        p=p,
        best_ratio_pth_power=approx,
        exact=best_val,
        exact_kind="exact" if isinstance(p, int) else "certified-lower",
        witness=best_f,
        pattern=res.argmax_radius,
        seed_kind=best_kind,
        trajectories=traces,
    )


# -- exhaustive patterns ---------------------------------------------------------


@dataclass(frozen=True)
class AveragingPattern:
    sigma: tuple[int, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def apply(self, f: VertexFunction) -> VertexFunction:
        return VertexFunction(sum((a * v for a, v in zip(row, f.values)), Fraction(0)) for row in self.matrix)


def pattern_count(g: Graph) -> int:
    return math.prod(e + 1 for e in g.distance_table.ecc)


def pattern_decomposition(g: Graph, budget: int = PATTERN_BUDGET) -> list[AveragingPattern]:
    """Every radius assignment ``sigma`` with its row-stochastic matrix ``A_sigma``."""
    count = pattern_count(g)
    if count > budget:
        raise BudgetExceeded(f"{count} patterns exceed the pattern budget {budget}")
    dt = g.distance_table
    D = dt.dist
    rows_by = []
    for x in range(g.n):
        opts = []
        for r in range(dt.ecc[x] + 1):
            members = set(np.flatnonzero(D[x] == r).tolist())
            w = Fraction(1, len(members))
            opts.append(tuple(w if y in members else Fraction(0) for y in range(g.n)))
        rows_by.append(opts)
    out = []
    for sigma in itertools.product(*(range(e + 1) for e in dt.ecc)):
        out.append(AveragingPattern(sigma, tuple(rows_by[x][r] for x, r in enumerate(sigma))))
    return out


def pattern_ratio_max(g: Graph, p, f: VertexFunction, budget: int = PATTERN_BUDGET) -> Fraction:
    """``max_sigma ||A_sigma f||_p^p / ||f||_p^p`` over all patterns, for integer ``p``."""
    p = parse_p(p)
    den = lp_norm(f, p)
    return max(lp_norm(pat.apply(f), p) for pat in pattern_decomposition(g, budget)) / den

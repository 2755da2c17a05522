"""Command-line driver: ``gagmax <subcommand> ...``.

Exit status is 0 on success, 1 when a mathematical check is refuted, and 2
for usage or input errors.  ``--json`` output keeps every exact rational
as a ``"num/den"`` string; floating-point fields carry an ``approx_`` prefix.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from gagmax import families
from gagmax.bounds import bound_report, frac_str, graph_id
from gagmax.enumeration import EnumFilter, enumerate_connected
from gagmax.errors import GagmaxError
from gagmax.graph import (
    Graph,
    emit_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
)
from gagmax.maximal import parse_p, power_maximal_symmetric
from gagmax.metric import antipode, classify, global_antipode
from gagmax.normsearch import SearchConfig, estimate_norm
from gagmax.product import (
    PowerGraph,
    cartesian_product,
    power_global_antipode,
    profile_count,
    verify_antipode_product,
)
from gagmax.surveys import SURVEYS

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_workers() -> int:
    env = os.environ.get("GAGMAX_WORKERS")
    if env:
        try:
            w = int(env)
        except ValueError:
            raise UsageError(f"GAGMAX_WORKERS must be an integer, got {env!r}") from None
        if w < 1:
            raise UsageError("GAGMAX_WORKERS must be >= 1")
        return w
    return os.cpu_count() or 1


def load_graph(text: str) -> Graph:
    """Read a named fixture, an ``n=...`` edge list, a file path, or graph6 text."""
    s = text.strip()
    named = families.by_name(s)
    if named is not None:
        return named
    if s.lower().startswith("n="):
        return parse_edge_list(s)
    path = Path(s)
    if path.is_file():
        lines = [ln.strip() for ln in path.read_text().splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise UsageError(f"{s}: no graph found")
        body = " ".join(lines) if lines[0].lower().startswith("n=") else lines[0]
        return load_graph(body) if body.lower().startswith("n=") else parse_graph6(body)
    return parse_graph6(s)


def _graph_arg(args: argparse.Namespace) -> Graph:
    sources = [s for s in (getattr(args, "graph_pos", None), args.graph, getattr(args, "edges", None)) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one graph (positional, --graph, or --edges)")
    if getattr(args, "edges", None):
        return parse_edge_list(args.edges)
    return load_graph(sources[0])


def _positive(name: str, v: int) -> int:
    if v < 1:
        raise UsageError(f"{name} must be a positive integer")
    return v


def _p_arg(text: str):
    try:
        p = parse_p(text)
    except ValueError:
        raise UsageError(f"bad exponent {text!r}") from None
    if p != math.inf and not p >= 1:
        raise UsageError("p must be >= 1 or inf")
    return p


def _emit(args: argparse.Namespace, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _table(rows: Sequence[tuple[str, object]]) -> list[str]:
    width = max(len(k) for k, _ in rows)
    return [f"{k:<{width}}  {v}" for k, v in rows]


# -- subcommands -------------------------------------------------------------------


def run_classify(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    c = classify(g, vt_cap=args.vt_cap)
    payload = {"graph": graph_id(g), **c.to_json()}
    vt = "not computed" if c.is_vertex_transitive is None else c.is_vertex_transitive
    rows = [
        ("graph", graph_id(g)),
        ("vertices / edges", f"{c.n} / {c.m}"),
        ("radius / diameter", f"{c.radius} / {c.diameter}"),
        ("GAG", c.is_gag),
        ("global antipode", f"{list(c.global_antipode)} (size {len(c.global_antipode)})"),
        ("eccentric", c.is_eccentric),
        ("sphere regular", c.is_sphere_regular),
        ("distance regular", c.is_distance_regular),
        ("vertex transitive", vt),
        ("tree", c.is_tree),
        ("leaves", list(c.leaf_set)),
    ]
    _emit(args, payload, _table(rows))
    return EXIT_OK


def run_antipode(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    per_vertex = {x: list(antipode(g, x)) for x in range(g.n)}
    ant = global_antipode(g)
    payload: dict = {
        "graph": graph_id(g),
        "antipodes": {str(x): a for x, a in per_vertex.items()},
        "global_antipode": list(ant),
        "is_gag": len(ant) < g.n,
    }
    lines = [f"ant({x}) = {a}" for x, a in per_vertex.items()]
    lines.append(f"ant(G) = {list(ant)}  ({'GAG' if len(ant) < g.n else 'not a GAG'})")
    if args.N is not None:
        desc = power_global_antipode(PowerGraph(g, _positive("-N", args.N)))
        payload["power"] = desc.to_json()
        lines.append(f"ant(G^{args.N}) = ant(G)^{args.N}, {desc.size} of {g.n ** args.N} vertices")
    _emit(args, payload, lines)
    return EXIT_OK


def run_bound(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    N = _positive("-N", args.N)
    p = _p_arg(args.p)
    rep = bound_report(g, N, p)
    lines = [f"bounds on ||M_{N}||_p^p for {rep.graph}^{N}, p = {args.p}"]
    for side, entries in (("lower", rep.lower), ("upper", rep.upper)):
        for e in entries:
            lines.append(f"  {side:<5}  {frac_str(e.value):>14}  {e.provenance}")
    if rep.leaf_fraction is not None:
        lines.append(f"  leaf fraction {frac_str(rep.leaf_fraction)}")
    if not rep.consistent():
        lines.append("  INCONSISTENT: a lower bound exceeds an upper bound")
    payload = rep.to_json()
    payload["consistent"] = rep.consistent()
    _emit(args, payload, lines)
    return EXIT_OK if rep.consistent() else EXIT_REFUTED


def _parse_set(text: str, n: int) -> list[int]:
    try:
        out = sorted({int(t) for t in text.replace(",", " ").split()})
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}") from None
    if not out or out[0] < 0 or out[-1] >= n:
        raise UsageError(f"vertex set must be a nonempty subset of 0..{n - 1}")
    return out


def run_power_check(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    N = _positive("-N", args.N)
    base = _parse_set(args.base_set, g.n) if args.base_set else list(global_antipode(g))
    values = power_maximal_symmetric(PowerGraph(g, N), base, budget=args.budget)
    ones = all(v.value == 1 for v in values)
    payload = {
        "graph": graph_id(g),
        "N": N,
        "base_set": base,
        "profile_count": len(values),
        "profiles": [v.to_json() for v in values],
    }
    lines = [f"M(1_B^{N}) on {graph_id(g)}^{N}, B = {base}: {len(values)} profiles"]
    if not args.check_identically_one or args.verbose:
        lines += [f"  {list(v.profile.counts)}  orbit {v.orbit:>8}  value {frac_str(v.value)}" for v in values]
    code = EXIT_OK
    if args.check_identically_one:
        payload["identically_one"] = ones
        lines.append(f"identically one: {'pass' if ones else 'FAIL'} ({len(values)} profiles)")
        code = EXIT_OK if ones else EXIT_REFUTED
    _emit(args, payload, lines)
    return code


def run_norm(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    p = _p_arg(args.p)
    if p == 1 or p == math.inf:
        raise UsageError("norm search needs 1 < p < inf; see `bound` for p = 1 and p = inf")
    cfg = SearchConfig(
        p=p,
        restarts=_positive("--restarts", args.restarts),
        max_iters=args.iters,
        tol=args.tol,
        seed=args.seed,
        exact_steps=args.exact_steps,
        workers=args.workers or default_workers(),
    )
    res = estimate_norm(g, cfg)
    payload = {"graph": graph_id(g), **res.to_json()}
    lines = _table(
        [
            ("graph", graph_id(g)),
            ("p", args.p),
            ("lower bound ||M||_p^p", f"{frac_str(res.exact)} ({res.exact_kind})"),
            ("approx", f"{float(res.exact):.12g}"),
            ("best seed", res.seed_kind),
            ("witness", " ".join(res.witness.to_json())),
        ]
    )
    _emit(args, payload, lines)
    return EXIT_OK


def run_survey(args: argparse.Namespace) -> int:
    chosen = [name for name in SURVEYS if getattr(args, name.replace("-", "_"))]
    if args.all:
        chosen = list(SURVEYS)
    if not chosen:
        raise UsageError("choose a survey (--min-nontree-gag, --min-leafless-gag, --min-tree-leaf-gap, --min-regular-gag, --all)")
    workers = args.workers or default_workers()
    reports = [SURVEYS[name](workers=workers) for name in chosen]
    lines = []
    for name, r in zip(chosen, reports):
        lines.append(f"{name}: {r.verdict} ({r.elapsed_ms} ms)")
        lines += [f"  witness {w}" for w in r.witnesses]
        lines += [f"  {k}: {v}" for k, v in r.facts.items() if k != "ten_vertex_regular_gags"]
        for w in r.facts.get("ten_vertex_regular_gags", []):
            lines.append(
                f"  {w['graph6']}  degree {w['degree']}  rad/diam {w['radius']}/{w['diameter']}"
                f"  |ant| {w['global_antipode_size']}"
            )
        lines += [f"  VIOLATION {v}" for v in r.violations]
    payload = reports[0].to_json() if len(reports) == 1 else {n: r.to_json() for n, r in zip(chosen, reports)}
    _emit(args, payload, lines)
    return EXIT_OK if all(r.confirmed for r in reports) else EXIT_REFUTED


def run_enumerate(args: argparse.Namespace) -> int:
    if args.degree is not None and not args.regular:
        raise UsageError("--degree requires --regular")
    flt = EnumFilter(
        max_vertices=args.max_vertices,
        min_vertices=args.min_vertices,
        max_edges=args.max_edges,
        regular_only=args.regular,
        degree=args.degree,
        min_degree=args.min_degree,
        trees_only=args.trees,
        allow_large=args.allow_large,
    )
    graphs = list(enumerate_connected(flt, workers=args.workers or default_workers()))
    counts: dict[int, int] = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    payload: dict = {"counts": {str(n): k for n, k in sorted(counts.items())}, "total": len(graphs)}
    if not args.count_only:
        payload["graphs"] = [emit_graph6(g) for g in graphs]
    lines = [] if args.count_only else [emit_graph6(g) for g in graphs]
    if args.count_only or args.json:
        lines += [f"n={n}: {k}" for n, k in sorted(counts.items())]
    _emit(args, payload, lines)
    return EXIT_OK


def run_product(args: argparse.Namespace) -> int:
    if len(args.graphs) == 1 and args.N is not None:
        g = load_graph(args.graphs[0])
        N = _positive("-N", args.N)
        prod = PowerGraph(g, N).materialize(args.budget)
        ok = None
    elif len(args.graphs) == 2 and args.N is None:
        g, h = (load_graph(s) for s in args.graphs)
        prod = cartesian_product(g, h)
        ok = verify_antipode_product(g, h, args.budget)
    else:
        raise UsageError("give two graphs, or one graph with -N")
    c = classify(prod, vt_cap=0)
    payload = {
        "graph6": graph_id(prod),
        "edge_list": format_edge_list(prod),
        "n": prod.n,
        "m": prod.m,
        "global_antipode_size": len(c.global_antipode),
        "is_gag": c.is_gag,
    }
    rows = [
        ("graph6", graph_id(prod)),
        ("vertices / edges", f"{prod.n} / {prod.m}"),
        ("global antipode size", len(c.global_antipode)),
        ("GAG", c.is_gag),
    ]
    if args.N is not None:
        payload["profile_count"] = profile_count(g.n, args.N)
        rows.append(("profiles", payload["profile_count"]))
    if ok is not None:
        payload["antipode_is_product"] = ok
        rows.append(("ant(G x H) = ant(G) x ant(H)", ok))
    _emit(args, payload, _table(rows))
    return EXIT_OK if ok in (None, True) else EXIT_REFUTED


# -- parser ----------------------------------------------------------------------------


def _add_graph(sp: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        sp.add_argument("graph_pos", nargs="?", metavar="GRAPH", help="graph6, n=... edge list, fixture name, or file")
    sp.add_argument("--graph", "-g", help="graph6, n=... edge list, fixture name, or file")
    sp.add_argument("--edges", help='edge-list literal such as "n=4; 0-1 0-2 1-2 2-3"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gagmax", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        # accept --json after the subcommand too
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("classify", help="metric classification of a graph")
    _add_graph(sp)
    sp.add_argument("--vt-cap", type=int, default=12, help="largest n for the vertex-transitivity check")
    common(sp)
    sp.set_defaults(func=run_classify)

    sp = sub.add_parser("antipode", help="vertex antipodes and the global antipode")
    _add_graph(sp)
    sp.add_argument("-N", type=int, help="also describe ant(G^N)")
    common(sp)
    sp.set_defaults(func=run_antipode)

    sp = sub.add_parser("bound", help="every applicable bound on ||M_N||_p")
    _add_graph(sp)
    sp.add_argument("-N", type=int, default=1)
    sp.add_argument("-p", default="2", help="exponent >= 1 or inf")
    common(sp)
    sp.set_defaults(func=run_bound)

    sp = sub.add_parser("power-check", help="M(1_{B^N}) on G^N, one value per profile")
    _add_graph(sp)
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("--base-set", help="base vertices of B (default: the global antipode)")
    sp.add_argument("--check-identically-one", action="store_true")
    sp.add_argument("--budget", type=int, default=2_000_000, help="maximum number of profiles")
    sp.add_argument("--verbose", "-v", action="store_true", help="list every profile")
    common(sp)
    sp.set_defaults(func=run_power_check)

    sp = sub.add_parser("norm", help="certified lower bound on ||M||_p by multistart ascent")
    _add_graph(sp)
    sp.add_argument("-p", default="2")
    sp.add_argument("--restarts", type=int, default=64)
    sp.add_argument("--iters", type=int, default=500)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exact-steps", action="store_true", help="revalidate every iterate exactly")
    sp.add_argument("--workers", type=int, help="default: GAGMAX_WORKERS or the CPU count")
    common(sp)
    sp.set_defaults(func=run_norm)

    sp = sub.add_parser("survey", help="exhaustive minimality surveys")
    for name in SURVEYS:
        sp.add_argument(f"--{name}", action="store_true")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--workers", type=int)
    common(sp)
    sp.set_defaults(func=run_survey)

    sp = sub.add_parser("enumerate", help="connected graphs up to isomorphism, as graph6")
    sp.add_argument("--max-vertices", "-n", type=int, required=True)
    sp.add_argument("--min-vertices", type=int, default=1)
    sp.add_argument("--max-edges", type=int)
    sp.add_argument("--regular", action="store_true")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--min-degree", type=int)
    sp.add_argument("--trees", action="store_true")
    sp.add_argument("--allow-large", action="store_true", help="allow up to 12 vertices (can take very long)")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--workers", type=int)
    common(sp)
    sp.set_defaults(func=run_enumerate)

    sp = sub.add_parser("product", help="Cartesian product G x H, or the power G^N")
    sp.add_argument("graphs", nargs="+", metavar="GRAPH")
    sp.add_argument("-N", type=int)
    sp.add_argument("--budget", type=int, default=250_000, help="maximum product size")
    common(sp)
    sp.set_defaults(func=run_product)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GagmaxError, ValueError, OSError) as exc:
        print(f"gagmax {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Exhaustive minimality surveys over small connected graphs.

A graph is *minimal* for a property when every other graph with the
property has at least as many vertices and at least as many edges; it is
*strongly minimal* when every other one has strictly more of both.  Each
survey scans a range that provably contains any counterexample to the
claim it checks, tests the literal predicates, and revalidates every
witness through :func:`gagmax.metric.classify` starting from its graph6
text.
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from gagmax import families
from gagmax.canon import canonical_form
from gagmax.enumeration import EnumFilter, enumerate_connected
from gagmax.graph import Graph, emit_graph6, parse_graph6
from gagmax.metric import Classification, classify

Predicate = Callable[[Graph, Classification], bool]


@dataclass
class SurveyReport:
    predicate: str
    witnesses: list[str]
    # graphs satisfying the predicate, keyed by (vertices, edges)
    counts: dict[tuple[int, int], int]
    verdict: str
    elapsed_ms: int
    scanned: dict[tuple[int, int], int] = field(default_factory=dict)
    facts: dict[str, object] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return self.verdict == "confirmed"

    def to_json(self) -> dict:
        def keyed(d: dict[tuple[int, int], int]) -> dict[str, int]:
            return {f"{n},{e}": k for (n, e), k in sorted(d.items())}

        return {
            "predicate": self.predicate,
            "witnesses": list(self.witnesses),
            "counts": keyed(self.counts),
            "verdict": self.verdict,
            "elapsed_ms": self.elapsed_ms,
            "scanned": keyed(self.scanned),
            "facts": self.facts,
            "violations": list(self.violations),
        }


@dataclass(frozen=True)
class _Hit:
    graph6: str
    graph: Graph
    cls: Classification

    @property
    def n(self) -> int:
        return self.cls.n

    @property
    def e(self) -> int:
        return self.cls.m


def _scan(
    filters: Iterable[EnumFilter], pred: Predicate, workers: int
) -> tuple[list[_Hit], Counter]:
    seen: set[str] = set()
    scanned: Counter = Counter()
    hits = []
    for flt in filters:
        for g in enumerate_connected(flt, workers):
            g6 = emit_graph6(g)
            if g6 in seen:
                continue
            seen.add(g6)
            scanned[g.n, g.m] += 1
            c = classify(g)
            if pred(g, c):
                hits.append(_Hit(g6, g, c))
    hits.sort(key=lambda h: (h.n, h.e, h.graph6))
    return hits, scanned


def _revalidate(witnesses: Iterable[str], pred: Predicate) -> list[str]:
    bad = []
    for g6 in witnesses:
        g = parse_graph6(g6)
        if not pred(g, classify(g)):
            bad.append(f"witness {g6} fails its predicate on revalidation")
    return bad


def _canon_g6(g: Graph) -> str:
    return canonical_form(g).decode()


def _others_violating(hits: list[_Hit], best: _Hit, strict: bool) -> list[_Hit]:
    out = []
    for h in hits:
        if h.graph6 == best.graph6:
            continue
        ok = (h.n > best.n and h.e > best.e) if strict else (h.n >= best.n and h.e >= best.e)
        if not ok:
            out.append(h)
    return out


def _finish(
    name: str,
    t0: float,
    witnesses: list[str],
    hits: list[_Hit],
    scanned: Counter,
    facts: dict,
    violations: list[str],
    pred: Predicate,
) -> SurveyReport:
    violations = violations + _revalidate(witnesses, pred)
    return SurveyReport(
        predicate=name,
        witnesses=witnesses,
        counts=dict(Counter((h.n, h.e) for h in hits)),
        verdict="refuted" if violations else "confirmed",
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        scanned=dict(scanned),
        facts=facts,
        violations=violations,
    )


def _find(hits: list[_Hit], g6: str) -> _Hit | None:
    return next((h for h in hits if h.graph6 == g6), None)


def _nontree_gag(g: Graph, c: Classification) -> bool:
    return c.is_gag and not c.is_tree


def survey_min_nontree_gag(workers: int = 1) -> SurveyReport:
    """The kite is the strongly minimal non-tree GAG.

    A competitor would need at most 4 vertices or at most 4 edges; connected
    graphs with at most 4 edges have at most 5 vertices, so scanning all
    graphs with ``n <= 5`` (plus ``e <= 5`` for context) is exhaustive.
    """
    t0 = time.perf_counter()
    hits, scanned = _scan(
        [EnumFilter(max_vertices=5), EnumFilter(max_vertices=6, max_edges=5)], _nontree_gag, workers
    )
    kite = _canon_g6(families.kite())
    violations = []
    small = [h.graph6 for h in hits if h.n <= 4]
    if small != [kite]:
        violations.append(f"non-tree GAGs on <= 4 vertices are {small}, expected only the kite")
    best = _find(hits, kite)
    if best is not None:
        violations += [
            f"{h.graph6} ({h.n} vertices, {h.e} edges) is not strictly larger than the kite"
            for h in _others_violating(hits, best, strict=True)
        ]
    facts = {
        "nontree_gags_with_at_most_3_vertices": sum(h.n <= 3 for h in hits),
        "other_nontree_gags_with_4_edges": sum(h.e == 4 and h.graph6 != kite for h in hits),
        "smallest_competitor": None
        if len(hits) < 2
        else {"graph6": hits[1].graph6, "n": hits[1].n, "e": hits[1].e},
    }
    return _finish("non-tree GAG", t0, [kite], hits, scanned, facts, violations, _nontree_gag)


def _leafless_gag(g: Graph, c: Classification) -> bool:
    return c.is_gag and g.n >= 3 and min(g.degrees) >= 2


def survey_min_leafless_gag(workers: int = 1) -> SurveyReport:
    """The hourglass is a minimal leafless GAG, strict in edges.

    Leafless connected graphs satisfy ``e >= n``.  A competitor with fewer
    vertices or fewer edges has ``n <= 5``; one with no more edges has
    ``n <= e <= 6``.  Both ranges are scanned completely.
    """
    t0 = time.perf_counter()
    hits, scanned = _scan(
        [EnumFilter(max_vertices=5, min_degree=2), EnumFilter(max_vertices=6, max_edges=6, min_degree=2)],
        _leafless_gag,
        workers,
    )
    hourglass = _canon_g6(families.hourglass())
    violations = []
    in_range = [h.graph6 for h in hits if h.n <= 6 and h.e <= 6]
    if in_range != [hourglass]:
        violations.append(f"leafless GAGs with n <= 6, e <= 6 are {in_range}, expected only the hourglass")
    best = _find(hits, hourglass)
    facts: dict[str, object] = {"C6_is_gag": classify(families.cycle(6)).is_gag}
    if best is not None:
        weak = _others_violating(hits, best, strict=False)
        violations += [f"{h.graph6} ({h.n} vertices, {h.e} edges) is smaller than the hourglass" for h in weak]
        others = [h for h in hits if h.graph6 != hourglass]
        facts["minimal"] = not weak
        facts["edge_strict"] = all(h.e > best.e for h in others)
        facts["vertex_strict"] = all(h.n > best.n for h in others)
        facts["strongly_minimal"] = facts["edge_strict"] and facts["vertex_strict"]
        facts["other_leafless_gags_on_5_vertices"] = sum(h.n == 5 for h in others)
        if not facts["edge_strict"]:
            violations.append("another leafless GAG has no more edges than the hourglass")
    return _finish("leafless GAG", t0, [hourglass], hits, scanned, facts, violations, _leafless_gag)


def _leaf_gap(g: Graph, c: Classification) -> bool:
    # trees are taken to have at least 3 vertices, as in the tree bound
    return c.is_tree and c.n >= 3 and set(c.leaf_set) != set(c.global_antipode)


def survey_min_tree_leaf_gap(workers: int = 1) -> SurveyReport:
    """The 6-vertex spider is the strongly minimal tree whose leaves exceed its global antipode.

    Trees have ``e = n - 1``, so a competitor has at most 6 vertices.
    """
    t0 = time.perf_counter()
    trees = list(enumerate_connected(EnumFilter(max_vertices=6, trees_only=True), workers))
    scanned = Counter((t.n, t.m) for t in trees)
    hits = []
    not_contained = []
    for t in trees:
        c = classify(t)
        if t.n >= 3 and not set(c.global_antipode) <= set(c.leaf_set):
            not_contained.append(emit_graph6(t))
        if _leaf_gap(t, c):
            hits.append(_Hit(emit_graph6(t), t, c))
    spider = _canon_g6(families.spider())
    violations = [f"tree {g6} has global antipode outside its leaves" for g6 in not_contained]
    if [h.graph6 for h in hits] != [spider]:
        violations.append(f"trees with leaf set != global antipode are {[h.graph6 for h in hits]}")
    sc = classify(families.spider())
    facts = {
        "trees_with_at_most_5_vertices_all_equal": not any(h.n <= 5 for h in hits),
        "six_vertex_trees": scanned[6, 5],
        "spider_leaf_set_size": len(sc.leaf_set),
        "spider_global_antipode": list(sc.global_antipode),
    }
    return _finish("tree with leaf set != global antipode", t0, [spider], hits, scanned, facts, violations, _leaf_gap)


def _regular_gag(g: Graph, c: Classification) -> bool:
    return c.is_gag and len(set(g.degrees)) == 1


def survey_min_regular_gag(workers: int = 1) -> SurveyReport:
    """No regular GAG has fewer than 10 vertices; several 3-regular ones have exactly 10.

    The witnesses are the two reference graphs, one per (radius, diameter)
    shape; every 10-vertex regular GAG found is listed under ``facts``.
    """
    t0 = time.perf_counter()
    hits, scanned = _scan([EnumFilter(max_vertices=10, regular_only=True)], _regular_gag, workers)
    violations = [f"regular GAG {h.graph6} on {h.n} vertices" for h in hits if h.n <= 9]
    ten = [h for h in hits if h.n == 10]
    witnesses = []
    for ref, want in [(families.regular_gag_a(), (2, 3, 9)), (families.regular_gag_b(), (3, 5, 4))]:
        h = _find(ten, _canon_g6(ref))
        if h is None:
            violations.append(f"reference graph {_canon_g6(ref)} missing from the 10-vertex scan")
            continue
        shape = (h.cls.radius, h.cls.diameter, len(h.cls.global_antipode))
        if shape != want or h.graph.degrees[0] != 3:
            violations.append(f"{h.graph6} has (radius, diameter, |ant|) = {shape}, expected {want}")
        witnesses.append(h.graph6)
    facts = {
        "regular_gags_by_n": dict(Counter(str(h.n) for h in hits)),
        "ten_vertex_regular_gags": [
            {
                "graph6": h.graph6,
                "degree": h.graph.degrees[0],
                "edges": h.e,
                "radius": h.cls.radius,
                "diameter": h.cls.diameter,
                "global_antipode_size": len(h.cls.global_antipode),
            }
            for h in ten
        ],
    }
    return _finish("regular GAG", t0, witnesses, hits, scanned, facts, violations, _regular_gag)


SURVEYS: dict[str, Callable[..., SurveyReport]] = {
    "min-nontree-gag": survey_min_nontree_gag,
    "min-leafless-gag": survey_min_leafless_gag,
    "min-tree-leaf-gap": survey_min_tree_leaf_gap,
    "min-regular-gag": survey_min_regular_gag,
}

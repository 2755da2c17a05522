"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--quick]

Kernel timings call both backends directly; the end-to-end rows run a small
enumeration in a subprocess with ``GAGMAX_PURE_PYTHON`` unset and set.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from gagmax import _pykernels, families
from gagmax.product import PowerGraph

try:
    from gagmax import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_graph(n: int, p: float, rng: random.Random):
    from gagmax.graph import Graph

    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, sorted(edges))


def best_of(fn, repeat: int, number: int) -> float:
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def row(label: str, py: float, c: float | None) -> str:
    if c is None:
        return f"{label:<38} {py * 1e6:>12.1f} {'n/a':>12} {'':>8}"
    return f"{label:<38} {py * 1e6:>12.1f} {c * 1e6:>12.1f} {py / c:>7.1f}x"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="fewer repetitions")
    args = ap.parse_args()
    rep = 3 if args.quick else 5

    print(f"{'kernel':<38} {'python us':>12} {'compiled us':>12} {'speedup':>8}")
    bfs_cases = [
        ("BFS all pairs, Q6 (64 vertices)", families.hypercube(6)),
        ("BFS all pairs, kite^5 (1024 vertices)", PowerGraph(families.kite(), 5).materialize()),
    ]
    for label, g in bfs_cases:
        indptr, indices = g.csr
        py = best_of(lambda: _pykernels.bfs_all_pairs(indptr, indices, g.n), rep, 1)
        c = None if _ckernels is None else best_of(lambda: _ckernels.bfs_all_pairs(indptr, indices, g.n), rep, 3)
        print(row(label, py, c))

    rng = random.Random(0)
    canon_cases = [
        ("canonical labeling, 10-vertex cubic", families.regular_gag_a()),
        ("canonical labeling, K12", families.complete(12)),
        ("canonical labeling, Q5", families.hypercube(5)),
        ("canonical labeling, random n=20", random_graph(20, 0.2, rng)),
    ]
    for label, g in canon_cases:
        masks = g.masks
        py = best_of(lambda: _pykernels.canonical_labeling(masks, g.n), rep, 3)
        c = None if _ckernels is None else best_of(lambda: _ckernels.canonical_labeling(masks, g.n), rep, 50)
        print(row(label, py, c))

    n = 7 if args.quick else 8
    script = f"from gagmax.enumeration import EnumFilter, enumerate_masks; enumerate_masks(EnumFilter(max_vertices={n}))"
    for label, pure in [(f"enumerate n <= {n}, compiled backend", False), (f"enumerate n <= {n}, python backend", True)]:
        env = dict(os.environ)
        env.pop("GAGMAX_PURE_PYTHON", None)
        if pure:
            env["GAGMAX_PURE_PYTHON"] = "1"
        t = timeit.timeit(lambda: subprocess.run([sys.executable, "-c", script], env=env, check=True), number=1)
        print(f"{label:<38} {t:>11.2f}s")


if __name__ == "__main__":
    main()

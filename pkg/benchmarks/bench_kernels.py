"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--number 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from listcf import kernels
from listcf.hypergraph import IntervalHypergraph
from listcf.intervals import ruler_coloring
from listcf.planar import grid_graph, paths_hypergraph


def cases(seed: int):
    rng = random.Random(seed)
    n = 255
    H = IntervalHypergraph(range(n))
    offsets, flat = [0], []
    for e in H.edges:
        flat.extend(e)
        offsets.append(len(flat))
    ruler = list(ruler_coloring(n))
    yield "first_violation (intervals n=255)", lambda b: kernels.first_violation(offsets, flat, ruler, "um", backend=b)
    big = list(ruler_coloring(1 << 11))
    yield "interval_first_violation (n=2047)", lambda b: kernels.interval_first_violation(big, "cf", backend=b)

    G = grid_graph(3, 4)
    masks = G.adjmask()
    yield "path_vertex_masks (3x4 grid)", lambda b: kernels.path_vertex_masks(G.n, masks, backend=b)

    P = paths_hypergraph(grid_graph(2, 4))
    lists = [sorted(rng.sample(range(1, 9), 4)) for _ in range(P.n)]
    yield "search_lists cf (2x4 grid paths)", lambda b: kernels.search_lists(lists, P.edges, "cf", backend=b)
    small = IntervalHypergraph(range(12))
    ulists = [sorted(rng.sample(range(1, 7), 3)) for _ in range(12)]
    yield "search_lists um (intervals n=12)", lambda b: kernels.search_lists(ulists, small.edges, "um", backend=b)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; timing the fallback only")
    print(f"{'kernel':40s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases(args.seed):
        results = {b: fn(b) for b in backends}
        # both backends must agree before timing means anything
        assert len({repr(r) for r in results.values()}) == 1, name
        best = {}
        for b in backends:
            best[b] = min(timeit.repeat(lambda: fn(b), repeat=args.repeat, number=args.number)) / args.number
        row = f"{name:40s}" + "".join(f"{best[b] * 1e3:10.3f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{best['python'] / best['compiled']:11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

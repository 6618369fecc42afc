"""Brute-force ground truth for tiny instances.

Nothing here is fast; everything here is simple. The naive routines avoid the
compiled kernels entirely so they can serve as a second opinion on them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb, isqrt

from . import kernels
from .errors import GuardExceeded, InputError
from .hypergraph import Hypergraph

CHROMATIC_GUARD = 10
FAMILY_GUARD = 10 ** 6
MODES = ("proper", "cf", "um")


def edge_ok(colors, e, mode: str) -> bool:
    """Plain-Python verdict for one hyperedge."""
    seen = [colors[v] for v in e]
    if mode == "proper":
        return len(e) < 2 or len(set(seen)) > 1
    if mode == "cf":
        return any(seen.count(c) == 1 for c in seen)
    if mode == "um":
        return seen.count(max(seen)) == 1
    raise InputError(f"unknown mode {mode!r}")


def naive_valid(H: Hypergraph, colors, mode: str) -> bool:
    return all(edge_ok(colors, e, mode) for e in H.edges)


def naive_list_colorable(H: Hypergraph, lists, mode: str):
    """First valid coloring in product order, or None."""
    for colors in product(*[sorted(lst) for lst in lists]):
        if naive_valid(H, colors, mode):
            return colors
    return None


@dataclass(frozen=True)
class ExhaustiveReport:
    chi: int
    chi_cf: int
    chi_um: int
    witnesses: dict

    def chain_holds(self) -> bool:
        return self.chi <= self.chi_cf <= self.chi_um


def min_colors(H: Hypergraph, mode: str):
    """Least ``k`` admitting a valid coloring with colors ``1..k``, with a witness."""
    if H.n == 0:
        return 0, ()
    for k in range(1, H.n + 1):
        palette = list(range(1, k + 1))
        # relabeling colors by first occurrence preserves proper and cf, not um
        found = kernels.search_lists([palette] * H.n, H.edges, mode, symmetric=mode != "um")
        if found is not None:
            return k, tuple(found)
    raise AssertionError("n distinct colors are always valid")


def exhaustive_chromatic(H: Hypergraph, guard: int = CHROMATIC_GUARD) -> ExhaustiveReport:
    if H.n > guard:
        raise GuardExceeded(f"exhaustive chromatic numbers limited to n <= {guard}")
    found = {mode: min_colors(H, mode) for mode in MODES}
    return ExhaustiveReport(found["proper"][0], found["cf"][0], found["um"][0],
                            {mode: found[mode][1] for mode in MODES})


def _canonical_family_count(n: int, ell: int, universe: int) -> int:
    # counts[m] = number of canonical prefixes whose colors are exactly 1..m
    counts = {0: 1}
    for _ in range(n):
        nxt: dict = {}
        for m, ways in counts.items():
            for new in range(0, ell + 1):
                if m + new > universe:
                    break
                nxt[m + new] = nxt.get(m + new, 0) + ways * comb(m, ell - new)
        counts = nxt
    return sum(counts.values())


def _canonical_families(n: int, ell: int, universe: int):
    """List families whose colors appear in first-occurrence order.

    Every family is a relabeling of one of these, so for notions invariant
    under color permutations they are the only ones to try.
    """
    def extend(prefix, m):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for new in range(0, ell + 1):
            if m + new > universe:
                break
            fresh = tuple(range(m + 1, m + new + 1))
            for old in combinations(range(1, m + 1), ell - new):
                prefix.append(old + fresh)
                yield from extend(prefix, m + new)
                prefix.pop()
    yield from extend([], 0)


def _all_families(n: int, ell: int, universe: int):
    options = list(combinations(range(1, universe + 1), ell))
    return product(options, repeat=n)


def family_count(n: int, ell: int, universe: int, mode: str) -> int:
    if mode == "um":
        return comb(universe, ell) ** n
    return _canonical_family_count(n, ell, universe)


def choosability_counterexample(H: Hypergraph, ell: int, mode: str, universe: int,
                                guard: int = FAMILY_GUARD):
    """First family of size-``ell`` lists over ``1..universe`` with no valid coloring."""
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    if ell < 1 or universe < ell:
        raise InputError("need 1 <= ell <= universe")
    count = family_count(H.n, ell, universe, mode)
    if count > guard:
        raise GuardExceeded(f"{count} list families exceed the guard {guard}")
    families = _all_families(H.n, ell, universe) if mode == "um" else \
        _canonical_families(H.n, ell, universe)
    for fam in families:
        if kernels.search_lists(fam, H.edges, mode) is None:
            return fam
    return None


def exhaustive_choosable(H: Hypergraph, ell: int, mode: str, universe: int,
                         guard: int = FAMILY_GUARD) -> bool:
    """Whether every family of size-``ell`` lists over ``1..universe`` admits
    a valid coloring (choosability relative to the bounded universe)."""
    return choosability_counterexample(H, ell, mode, universe, guard) is None


def dfs_path_vertex_sets(adj) -> set:
    """Vertex sets of all simple paths, by explicit depth-first extension."""
    found = set()

    def walk(path, members):
        found.add(frozenset(members))
        for u in adj[path[-1]]:
            if u not in members:
                path.append(u)
                members.add(u)
                walk(path, members)
                members.discard(u)
                path.pop()

    for s in range(len(adj)):
        walk([s], {s})
    return found


def degeneracy(adj) -> int:
    """Largest minimum degree over the peeling sequence (networkx-free)."""
    alive = {v: set(a) for v, a in enumerate(adj)}
    best = 0
    while alive:
        v = min(alive, key=lambda u: (len(alive[u]), u))
        best = max(best, len(alive[v]))
        for u in alive.pop(v):
            alive[u].discard(v)
    return best


def sampled_halfplane_cuts(points, samples: int, seed: int) -> set:
    """Subsets cut by random closed halfplanes ``a x + b y <= c`` (exact integers)."""
    rng = random.Random(seed)
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1) * 4
    out = set()
    for _ in range(samples):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        if a == 0 and b == 0:
            continue
        vals = sorted(a * x + b * y for x, y in points)
        # thresholds at and between the projected values
        c = rng.choice(vals) if rng.random() < 0.5 else rng.randint(vals[0] - span, vals[-1] + span)
        cut = frozenset(i for i, (x, y) in enumerate(points) if a * x + b * y <= c)
        if cut:
            out.add(cut)
    return out


def sampled_disc_cuts(points, samples: int, seed: int) -> set:
    """Subsets cut by random closed discs with rational centers."""
    rng = random.Random(seed)
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    pad = max(hi_x - lo_x, hi_y - lo_y, 1)
    out = set()
    for _ in range(samples):
        cx = Fraction(rng.randint(4 * (lo_x - pad), 4 * (hi_x + pad)), 4)
        cy = Fraction(rng.randint(4 * (lo_y - pad), 4 * (hi_y + pad)), 4)
        d2 = sorted((x - cx) ** 2 + (y - cy) ** 2 for x, y in points)
        r2 = rng.choice(d2) if rng.random() < 0.5 else d2[0] + (d2[-1] - d2[0]) * Fraction(rng.random())
        cut = frozenset(i for i, (x, y) in enumerate(points) if (x - cx) ** 2 + (y - cy) ** 2 <= r2)
        if cut:
            out.add(cut)
    return out


def grid_coverage_sets(discs, scale: int = 4) -> set:
    """Coverage sets of the points of a ``1/scale`` lattice over the discs' bounding box."""
    lo_x = min(cx - (isqrt(r2) + 1) for cx, cy, r2 in discs) - 1
    hi_x = max(cx + (isqrt(r2) + 1) for cx, cy, r2 in discs) + 1
    lo_y = min(cy - (isqrt(r2) + 1) for cx, cy, r2 in discs) - 1
    hi_y = max(cy + (isqrt(r2) + 1) for cx, cy, r2 in discs) + 1
    out = set()
    for gx in range(lo_x * scale, hi_x * scale + 1):
        for gy in range(lo_y * scale, hi_y * scale + 1):
            cover = frozenset(i for i, (cx, cy, r2) in enumerate(discs)
                              if (gx - cx * scale) ** 2 + (gy - cy * scale) ** 2 <= r2 * scale * scale)
            if cover:
                out.add(cover)
    return out


"""Planar graphs with respect to paths: separators and list cf-coloring.

The cf list coloring recurses on a balanced separator: the separator gets
pairwise distinct colors that are then struck from every other list, and the
two sides are colored independently. Any separator family with
``|S| <= c_sep * sqrt(n)`` and parts of at most ``2n/3`` vertices works; the
list size needed is ``c_sep / (1 - sqrt(2/3)) * sqrt(n)``.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from . import kernels
from .errors import GreedyStuck, GuardExceeded, InputError, InvariantBreach, ListTooSmall
from .hypergraph import ColorListFamily, Hypergraph, as_lists, verify_cf

C_SEP = math.sqrt(8)
C_SEP_SQUARED = 8
PATHS_GUARD = 14
EXHAUSTIVE_SEPARATOR_LIMIT = 16


def recursion_constant(c_sep: float = C_SEP) -> float:
    """Sum of the geometric series of separator sizes, per unit of sqrt(n)."""
    return c_sep / (1 - math.sqrt(2 / 3))


def path_list_size(n: int, c_sep: float = C_SEP) -> int:
    return math.ceil(recursion_constant(c_sep) * math.sqrt(n)) if n else 0


class PlanarGraph:
    """Simple undirected graph on ``0..n-1`` whose planarity is checked at load."""

    def __init__(self, n: int, adj: Sequence[Iterable[int]], *, check_planar: bool = True,
                 positions=None):
        if not isinstance(n, int) or n < 0 or len(adj) != n:
            raise InputError("adjacency must have one row per vertex")
        rows = []
        for v, row in enumerate(adj):
            r = sorted(set(row))
            if len(r) != len(list(row)):
                raise InputError(f"vertex {v} lists a neighbor twice")
            if v in r:
                raise InputError(f"loop at vertex {v}")
            if r and (r[0] < 0 or r[-1] >= n):
                raise InputError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            rows.append(tuple(r))
        for v, row in enumerate(rows):
            for u in row:
                if v not in rows[u]:
                    raise InputError(f"adjacency is not symmetric at ({v}, {u})")
        self.n = n
        self.adj = tuple(rows)
        self.positions = positions
        if check_planar and not nx.check_planarity(self.to_networkx())[0]:
            raise InputError("graph is not planar")

    @classmethod
    def from_edges(cls, n: int, edges, **kw) -> PlanarGraph:
        adj: list[set] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, [sorted(a) for a in adj], **kw)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def adjmask(self) -> list[int]:
        return [sum(1 << u for u in row) for row in self.adj]

    def __repr__(self):
        return f"PlanarGraph(n={self.n}, m={len(self.edges())})"


def grid_graph(rows: int, cols: int) -> PlanarGraph:
    """rows x cols grid, vertex ``r * cols + c``."""
    if rows < 1 or cols < 1:
        raise InputError("grid needs positive dimensions")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    pos = [(c, r) for r in range(rows) for c in range(cols)]
    return PlanarGraph.from_edges(rows * cols, edges, check_planar=False, positions=pos)


def star_graph(n: int) -> PlanarGraph:
    """K_{1,n-1} with center 0."""
    if n < 1:
        raise InputError("star needs n >= 1")
    return PlanarGraph.from_edges(n, [(0, v) for v in range(1, n)], check_planar=False)


def random_planar_graph(n: int, seed: int, keep: float = 0.7) -> PlanarGraph:
    """Random planar graph: shuffled pairs, each kept with probability ``keep`` if planarity survives."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for u, v in pairs:
        if rng.random() > keep:
            continue
        g.add_edge(u, v)
        if not nx.check_planarity(g)[0]:
            g.remove_edge(u, v)
    return PlanarGraph.from_edges(n, g.edges(), check_planar=False)


def subgraph(G: PlanarGraph, vertices: Iterable[int]) -> tuple[PlanarGraph, tuple[int, ...]]:
    ids = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(ids)}
    adj = [[index[u] for u in G.adj[v] if u in index] for v in ids]
    return PlanarGraph(len(ids), adj, check_planar=False), ids


def paths_hypergraph(G: PlanarGraph, guard: int = PATHS_GUARD) -> Hypergraph:
    """Hyperedges are the vertex sets of all simple paths (single vertices included)."""
    if G.n > guard:
        raise GuardExceeded(f"path hypergraph limited to n <= {guard}, got {G.n}")
    masks = kernels.path_vertex_masks(G.n, G.adjmask())
    edges = [tuple(v for v in range(G.n) if m >> v & 1) for m in masks]
    edges.sort(key=lambda e: (len(e), e))
    return Hypergraph(G.n, edges)


def components(G: PlanarGraph, alive: Iterable[int]) -> list[list[int]]:
    alive = set(alive)
    seen: set = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if u in alive and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def _pack(comps: list[list[int]]):
    """Split components into two groups minimizing the larger side."""
    total = sum(len(c) for c in comps)
    parent = {0: None}
    for i, comp in enumerate(comps):
        for s in list(parent):
            t = s + len(comp)
            if t not in parent:
                parent[t] = (s, i)
    target = min(parent, key=lambda s: (max(s, total - s), -s))
    chosen = set()
    s = target
    while parent[s] is not None:
        prev, i = parent[s]
        chosen.add(i)
        s = prev
    R = sorted(v for i, c in enumerate(comps) if i in chosen for v in c)
    B = sorted(v for i, c in enumerate(comps) if i not in chosen for v in c)
    return R, B


@dataclass(frozen=True)
class SeparatorDecomposition:
    S: tuple[int, ...]
    R: tuple[int, ...]
    B: tuple[int, ...]
    method: str = ""


def separator_problems(G: PlanarGraph, dec: SeparatorDecomposition,
                       c_sep_squared: int = C_SEP_SQUARED) -> list[str]:
    """Every violated decomposition invariant, as text (empty when all hold)."""
    problems = []
    S, R, B = set(dec.S), set(dec.R), set(dec.B)
    if S & R or S & B or R & B:
        problems.append("parts overlap")
    if S | R | B != set(range(G.n)):
        problems.append("parts do not cover the vertex set")
    if any(u in B for v in R for u in G.adj[v]):
        problems.append("edge between R and B")
    if 3 * max(len(R), len(B)) > 2 * G.n:
        problems.append(f"part larger than 2n/3 ({len(R)}, {len(B)}, n={G.n})")
    if len(S) ** 2 > c_sep_squared * G.n:
        problems.append(f"separator of size {len(S)} exceeds the bound for n={G.n}")
    return problems


def _evaluate(G: PlanarGraph, S) -> tuple[list[int], list[int]] | None:
    S = set(S)
    R, B = _pack(components(G, set(range(G.n)) - S))
    if 3 * max(len(R), len(B)) <= 2 * G.n:
        return R, B
    return None


def _exhaustive_separator(G: PlanarGraph) -> SeparatorDecomposition:
    n = G.n
    for size in range(n + 1):
        best = None
        for S in combinations(range(n), size):
            split = _evaluate(G, S)
            if split is None:
                continue
            key = (max(len(split[0]), len(split[1])), S)
            if best is None or key < best[0]:
                best = (key, S, split)
        if best is not None:
            _, S, (R, B) = best
            return SeparatorDecomposition(tuple(S), tuple(R), tuple(B), "exhaustive")
    raise InvariantBreach("no balanced separator exists")  # unreachable: S = V works


def _bfs_levels(G: PlanarGraph, root: int, alive: set):
    level = {root: 0}
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if u in alive and u not in level:
                level[u] = level[v] + 1
                parent[u] = v
                order.append(u)
                queue.append(u)
    depth = max(level.values())
    layers = [[] for _ in range(depth + 1)]
    for v in order:
        layers[level[v]].append(v)
    return level, parent, layers


def _level_separator(G: PlanarGraph, comp: list[int]) -> set:
    """BFS levels plus a fundamental-cycle cut inside one connected component."""
    m = len(comp)
    alive = set(comp)
    level, parent, layers = _bfs_levels(G, comp[0], alive)
    r = len(layers) - 1

    def layer(i):
        return layers[i] if 0 <= i <= r else []

    cum = 0
    l1 = 0
    for i, lay in enumerate(layers):
        cum += len(lay)
        if 2 * cum >= m:
            l1 = i
            break
    k = cum

    def cost0(l):
        return len(layer(l)) + 2 * (l1 - l)

    def cost2(l):
        return len(layer(l)) + 2 * (l - l1 - 1)

    lows = [l for l in range(l1, -2, -1) if cost0(l) ** 2 <= 4 * k]
    l0 = lows[0] if lows else min(range(-1, l1 + 1), key=cost0)
    highs = [l for l in range(l1 + 1, r + 2) if cost2(l) ** 2 <= 4 * (m - k)]
    l2 = highs[0] if highs else min(range(l1 + 1, r + 2), key=cost2)

    base = set(layer(l0)) | set(layer(l2))
    middle = [v for v in comp if l0 < level[v] < l2]
    if 3 * len(middle) <= 2 * m:
        return base

    def climb(u):
        path = [u]
        while level[path[-1]] > l0 + 1:
            path.append(parent[path[-1]])
        return path

    paths = {u: climb(u) for u in middle}
    best = None
    for u, v in combinations(sorted(middle), 2):
        pu, pv = paths[u], set(paths[v])
        cycle = set()
        for w in pu:
            cycle.add(w)
            if w in pv:
                break
        else:
            w = None
        for x in paths[v]:
            cycle.add(x)
            if x == w:
                break
        S = base | cycle
        if len(S) ** 2 > C_SEP_SQUARED * m:
            continue
        if _evaluate(G, S) is not None:
            key = len(S)
            if best is None or key < best[0]:
                best = (key, S)
    if best is None:
        raise InvariantBreach("fundamental-cycle search found no separator")
    return best[1]


def _large_separator(G: PlanarGraph) -> SeparatorDecomposition:
    n = G.n
    comps = components(G, range(n))
    big = [c for c in comps if 3 * len(c) > 2 * n]
    S: set = set()
    if big:
        S = _level_separator(G, big[0])
    split = _evaluate(G, S)
    if split is None:
        raise InvariantBreach("level separator is unbalanced")
    R, B = split
    return SeparatorDecomposition(tuple(sorted(S)), tuple(R), tuple(B), "levels")


def find_separator(G: PlanarGraph, exhaustive_limit: int = EXHAUSTIVE_SEPARATOR_LIMIT
                   ) -> SeparatorDecomposition:
    """Balanced separator: minimum size by exhaustive search for small graphs,
    BFS levels plus a fundamental cycle above ``exhaustive_limit``.

    Exhaustive search prefers the smallest ``S``, then the smaller larger
    part, then the lexicographically first ``S``.
    """
    if G.n == 0:
        return SeparatorDecomposition((), (), (), "empty")
    if G.n <= exhaustive_limit:
        return _exhaustive_separator(G)
    return _large_separator(G)


@dataclass(frozen=True)
class SeparatorLevel:
    depth: int
    vertices: tuple[int, ...]
    S: tuple[int, ...]
    R: tuple[int, ...]
    B: tuple[int, ...]
    problems: tuple[str, ...]


@dataclass(frozen=True)
class PathsColoringResult:
    coloring: tuple[int, ...]
    levels: tuple[SeparatorLevel, ...]
    verified: bool | None


def cf_color_paths_from_lists(G: PlanarGraph, lists, *, c_sep: float = C_SEP,
                              enforce_bound: bool = True, verify: bool = True,
                              guard: int = PATHS_GUARD) -> PathsColoringResult:
    """Conflict-free coloring of ``G`` with respect to paths, from ``lists``."""
    family = as_lists(lists, G.n)
    if enforce_bound:
        # n colors always suffice: at most n - 1 are ever struck from one list
        need = min(path_list_size(G.n, c_sep), G.n)
        for v, lst in enumerate(family):
            if len(lst) < need:
                raise ListTooSmall(v, len(lst), need)
    remaining = [set(lst) for lst in family]
    coloring = [0] * G.n
    levels: list[SeparatorLevel] = []

    def solve(vertices, depth):
        if not vertices:
            return
        sub, ids = subgraph(G, vertices)
        dec = find_separator(sub)
        problems = separator_problems(sub, dec)
        S = [ids[v] for v in dec.S]
        R = [ids[v] for v in dec.R]
        B = [ids[v] for v in dec.B]
        levels.append(SeparatorLevel(depth, tuple(ids), tuple(S), tuple(R), tuple(B), tuple(problems)))
        if problems:
            raise InvariantBreach(f"separator invariants failed at depth {depth}: {problems}")
        used: list[int] = []
        for v in sorted(S):
            free = sorted(remaining[v].difference(used))
            if not free:
                msg = f"no free color for separator vertex {v} at depth {depth}"
                # with the size bound in force this cannot happen
                raise InvariantBreach(msg) if enforce_bound else GreedyStuck(msg)
            coloring[v] = free[0]
            used.append(free[0])
        for u in R + B:
            remaining[u].difference_update(used)
        solve(B, depth + 1)
        solve(R, depth + 1)

    solve(list(range(G.n)), 0)
    verified = None
    if verify and G.n <= guard:
        verified = bool(verify_cf(paths_hypergraph(G, guard), coloring))
    return PathsColoringResult(tuple(coloring), tuple(levels), verified)


def star_lower_bound_lists(n: int, s: int) -> ColorListFamily:
    """Center (vertex 0) gets ``{1..s}``; every leaf gets ``{s+1..2s}``."""
    if n < 3 or s < 1:
        raise InputError("need n >= 3 and s >= 1")
    center = range(1, s + 1)
    leaf = range(s + 1, 2 * s + 1)
    return ColorListFamily([center] + [leaf] * (n - 1))

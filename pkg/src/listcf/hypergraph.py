"""Hypergraphs, list families, induced subhypergraphs and coloring verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import InputError


class Hypergraph:
    """Vertices ``0..n-1`` and an ordered, deduplicated family of hyperedges.

    Each hyperedge is stored as an ascending tuple. Duplicates are dropped
    keeping the first occurrence, so the family order is the construction
    order. Empty hyperedges are rejected.
    """

    kind = "generic"

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a non-negative int, got {n!r}")
        self.n = n
        seen = set()
        family = []
        for raw in edges:
            e = tuple(sorted(set(raw)))
            if not e:
                raise InputError("hyperedges must be nonempty")
            if e[0] < 0 or e[-1] >= n:
                raise InputError(f"hyperedge {e} has a vertex outside 0..{n - 1}")
            if e not in seen:
                seen.add(e)
                family.append(e)
        self._edges = tuple(family)

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self._edges

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def csr(self) -> tuple[list[int], list[int]]:
        offsets = [0]
        flat: list[int] = []
        for e in self.edges:
            flat.extend(e)
            offsets.append(len(flat))
        return offsets, flat

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={len(self.edges)})"


class IntervalHypergraph(Hypergraph):
    """Discrete interval hypergraph on points of a line.

    ``positions`` are the (strictly increasing) coordinates of the vertices;
    vertex ``i`` is the i-th point from the left. Hyperedges are all runs
    ``[s, t]`` in the order (s, t) lexicographic and are generated lazily.
    Verification and induction use closed forms instead of the edge family.
    """

    kind = "intervals"

    def __init__(self, positions: Iterable[int]):
        pos = tuple(positions)
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise InputError("interval positions must be strictly increasing")
        self.n = len(pos)
        self.positions = pos

    @cached_property
    def _edges(self):
        n = self.n
        return tuple(tuple(range(s, t + 1)) for s in range(n) for t in range(s, n))

    @property
    def n_edges(self) -> int:
        return self.n * (self.n + 1) // 2

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return (v + 1) * (self.n - v)

    def degrees(self) -> list[int]:
        return [(v + 1) * (self.n - v) for v in range(self.n)]

    def __eq__(self, other):
        if isinstance(other, IntervalHypergraph):
            return self.n == other.n
        return Hypergraph.__eq__(self, other)

    def __hash__(self):
        return hash(("intervals", self.n))

    def __repr__(self):
        return f"IntervalHypergraph(n={self.n})"


class ColorListFamily:
    """One nonempty ascending tuple of positive colors per vertex."""

    def __init__(self, lists: Iterable[Iterable[int]]):
        normalized = []
        for v, raw in enumerate(lists):
            lst = tuple(sorted(set(raw)))
            if not lst:
                raise InputError(f"list of vertex {v} is empty")
            if any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in lst):
                raise InputError(f"list of vertex {v} has a non-positive or non-integer color")
            normalized.append(lst)
        self.lists = tuple(normalized)

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> ColorListFamily:
        colors = tuple(colors)
        return cls([colors] * n)

    def sizes(self) -> list[int]:
        return [len(lst) for lst in self.lists]

    def union(self) -> list[int]:
        return sorted({c for lst in self.lists for c in lst})

    def __len__(self):
        return len(self.lists)

    def __getitem__(self, v):
        return self.lists[v]

    def __iter__(self):
        return iter(self.lists)

    def __eq__(self, other):
        if isinstance(other, ColorListFamily):
            return self.lists == other.lists
        return NotImplemented

    def __hash__(self):
        return hash(self.lists)

    def __repr__(self):
        return f"ColorListFamily({[list(l) for l in self.lists]})"


def as_lists(lists, n: int | None = None) -> ColorListFamily:
    family = lists if isinstance(lists, ColorListFamily) else ColorListFamily(lists)
    if n is not None and len(family) != n:
        raise InputError(f"expected {n} lists, got {len(family)}")
    return family


def as_coloring(colors: Sequence[int], n: int) -> tuple[int, ...]:
    if colors is None or len(colors) != n:
        raise InputError(f"coloring must assign a color to each of the {n} vertices")
    out = tuple(colors)
    for v, c in enumerate(out):
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise InputError(f"vertex {v} has invalid color {c!r}")
    return out


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < H.n:
        raise InputError(f"vertex {v!r} outside 0..{H.n - 1}")


@dataclass(frozen=True)
class Induced:
    """An induced subhypergraph plus its vertex map (``ids[new] == old``)."""

    hypergraph: Hypergraph
    ids: tuple[int, ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.ids)}

    def to_parent(self, vertices: Iterable[int]) -> list[int]:
        return [self.ids[v] for v in vertices]


def induce(H: Hypergraph, vertices: Iterable[int]) -> Induced:
    """Subhypergraph induced by ``vertices``, re-indexed in ascending id order."""
    ids = tuple(sorted(set(vertices)))
    for v in ids:
        _check_vertex(H, v)
    if isinstance(H, IntervalHypergraph):
        return Induced(IntervalHypergraph(H.positions[v] for v in ids), ids)
    index = {old: new for new, old in enumerate(ids)}
    edges = []
    for e in H.edges:
        cut = [index[v] for v in e if v in index]
        if cut:
            edges.append(cut)
    return Induced(Hypergraph(len(ids), edges), ids)


@dataclass(frozen=True)
class DelaunayGraph:
    """Graph of the cardinality-2 hyperedges of a hypergraph."""

    n: int
    edges: frozenset

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, sorted(self.edges))


def delaunay_graph(H: Hypergraph) -> DelaunayGraph:
    if isinstance(H, IntervalHypergraph):
        return DelaunayGraph(H.n, frozenset((i, i + 1) for i in range(H.n - 1)))
    return DelaunayGraph(H.n, frozenset(e for e in H.edges if len(e) == 2))


def degree(H: Hypergraph, v: int) -> int:
    return H.degree(v)


def s_of_count(m: int) -> int:
    """Least s >= 1 with m <= s(s-1)/2."""
    s = 1
    while s * (s - 1) // 2 < m:
        s += 1
    return s


def s_of(H: Hypergraph) -> int:
    return s_of_count(H.n_edges)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier; truthy iff ``ok``. ``witness`` is the first bad edge."""

    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


def _verify(H: Hypergraph, colors, mode: str) -> Verdict:
    colors = as_coloring(colors, H.n)
    if isinstance(H, IntervalHypergraph):
        bad = kernels.interval_first_violation(colors, mode)
        if bad is None:
            return Verdict(True)
        return Verdict(False, tuple(range(bad[0], bad[1] + 1)))
    offsets, flat = H.csr
    e = kernels.first_violation(offsets, flat, colors, mode)
    if e < 0:
        return Verdict(True)
    return Verdict(False, H.edges[e])


def verify_proper(H: Hypergraph, colors) -> Verdict:
    """Every hyperedge with at least two vertices is non-monochromatic."""
    return _verify(H, colors, "proper")


def verify_cf(H: Hypergraph, colors) -> Verdict:
    """Every hyperedge has a color occurring exactly once in it."""
    return _verify(H, colors, "cf")


def verify_um(H: Hypergraph, colors) -> Verdict:
    """In every hyperedge the maximum color occurs exactly once."""
    return _verify(H, colors, "um")


VERIFIERS = {"proper": verify_proper, "cf": verify_cf, "um": verify_um}


def verify_from_lists(colors, lists) -> bool:
    family = as_lists(lists)
    colors = as_coloring(colors, len(family))
    return all(c in lst for c, lst in zip(colors, family.lists))


def n_classes(colors) -> int:
    return len(set(colors))

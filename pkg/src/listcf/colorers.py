"""Proper k-colorers consumed by the potential engine."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .errors import ColorerViolation, GuardExceeded, InputError
from .hypergraph import (
    DelaunayGraph,
    Hypergraph,
    IntervalHypergraph,
    delaunay_graph,
    induce,
    verify_proper,
)
from .potential import HereditaryColorer

EXACT_GUARD = 24


@dataclass(frozen=True)
class ProperColoringCertificate:
    coloring: tuple[int, ...]
    classes_used: int
    k_claimed: int

    def check(self, H: Hypergraph) -> bool:
        return self.classes_used <= self.k_claimed and bool(verify_proper(H, self.coloring))


def _certificate(coloring, k_claimed) -> ProperColoringCertificate:
    coloring = tuple(coloring)
    return ProperColoringCertificate(coloring, len(set(coloring)), k_claimed)


def interval_two_color(H: Hypergraph) -> ProperColoringCertificate:
    """Alternate 1, 2, 1, ... along the line."""
    if not isinstance(H, IntervalHypergraph):
        raise InputError("interval_two_color needs a position-tagged interval hypergraph")
    return _certificate((1 if i % 2 == 0 else 2 for i in range(H.n)), 2)


def exact_k_color(H: Hypergraph, k: int, guard: int = EXACT_GUARD):
    """Proper coloring with at most ``k`` colors by backtracking, or None.

    Vertices are visited by decreasing degree (ties by id) and each gets the
    lowest feasible color; the first complete coloring found is returned.
    """
    if H.n > guard:
        raise GuardExceeded(f"exact coloring limited to n <= {guard}, got n={H.n}")
    if k < 1:
        raise InputError("k must be positive")
    if H.n == 0:
        return _certificate((), k)
    big = [e for e in H.edges if len(e) >= 2]
    deg = [0] * H.n
    for e in big:
        for v in e:
            deg[v] += 1
    order = sorted(range(H.n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    edges = [tuple(sorted(pos[v] for v in e)) for e in big]
    palette = list(range(1, k + 1))
    found = kernels.search_lists([palette] * H.n, edges, "proper", symmetric=True)
    if found is None:
        return None
    coloring = [0] * H.n
    for i, v in enumerate(order):
        coloring[v] = found[i]
    return _certificate(coloring, k)


def degeneracy_order(G: DelaunayGraph) -> list[int]:
    """Elimination order that repeatedly removes a minimum-degree vertex (ties by id)."""
    adj = [set(a) for a in G.adjacency()]
    alive = set(range(G.n))
    order = []
    while alive:
        v = min(alive, key=lambda u: (len(adj[u]), u))
        order.append(v)
        alive.remove(v)
        for u in adj[v]:
            adj[u].discard(v)
        adj[v] = set()
    return order


def degeneracy_greedy_color(G: DelaunayGraph) -> ProperColoringCertificate:
    """Color in reverse elimination order with the smallest free color."""
    adj = G.adjacency()
    colors = [0] * G.n
    for v in reversed(degeneracy_order(G)):
        used = {colors[u] for u in adj[v] if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    cert = _certificate(colors, 0)
    return ProperColoringCertificate(cert.coloring, cert.classes_used, cert.classes_used)


def missing_delaunay_pair(H: Hypergraph):
    """First hyperedge of size >= 2 that contains no size-2 hyperedge, or None."""
    pairs = delaunay_graph(H).edges
    for e in H.edges:
        if len(e) <= 2:
            continue
        members = set(e)
        if not any(u in members and v in members for u, v in pairs):
            return e
    return None


def delaunay_color(H: Hypergraph, k: int, guard: int = EXACT_GUARD) -> ProperColoringCertificate:
    """Proper coloring of ``H`` obtained from its Delaunay graph.

    A proper coloring of the Delaunay graph is proper for ``H`` when every
    hyperedge of size >= 2 contains a Delaunay pair; this is checked, and the
    full hypergraph is colored exactly when it fails.
    """
    if missing_delaunay_pair(H) is not None:
        cert = exact_k_color(H, k, guard)
        if cert is None:
            raise ColorerViolation(f"hypergraph on {H.n} vertices is not {k}-colorable")
        return cert
    G = delaunay_graph(H)
    if H.n <= guard:
        cert = exact_k_color(G.as_hypergraph(), k, guard)
        if cert is None:
            raise ColorerViolation(f"Delaunay graph on {H.n} vertices is not {k}-colorable")
        return cert
    return degeneracy_greedy_color(G)


def interval_colorer() -> HereditaryColorer:
    return HereditaryColorer(2, lambda sub, ids: interval_two_color(sub), "interval-2")


def exact_colorer(k: int, guard: int = EXACT_GUARD) -> HereditaryColorer:
    """Exact backtracking on each induced subhypergraph (returns None when not k-colorable)."""
    return HereditaryColorer(k, lambda sub, ids: exact_k_color(sub, k, guard), f"exact-{k}")


def delaunay_colorer(k: int, guard: int = EXACT_GUARD, name: str = "delaunay") -> HereditaryColorer:
    return HereditaryColorer(k, lambda sub, ids: delaunay_color(sub, k, guard), f"{name}-{k}")


def region_hereditary_colorer(family, guard: int = EXACT_GUARD) -> HereditaryColorer:
    """Colorer for hypergraphs induced by a disc family (or by points w.r.t. discs).

    Exact 4-coloring of the Delaunay graph while the family fits the guard,
    otherwise degeneracy greedy, which uses at most 6 colors on planar
    Delaunay graphs; the declared ``k`` follows that choice.
    """
    k = 4 if len(family) <= guard else 6
    return delaunay_colorer(k, guard, "region")


def hereditary_chromatic_number(H: Hypergraph, limit: int = 12) -> int:
    """Max over all vertex subsets of the chromatic number of the induced subhypergraph."""
    if H.n > limit:
        raise GuardExceeded(f"hereditary chromatic number limited to n <= {limit}")
    best = 1 if H.n else 0
    for size in range(2, H.n + 1):
        for subset in combinations(range(H.n), size):
            sub = induce(H, subset).hypergraph
            k = best
            while exact_k_color(sub, k, guard=limit) is None:
                k += 1
            best = k
    return best

"""Unique-maximum list coloring of hypergraphs with few hyperedges.

Lists of size ``min(deg(v) + 1, s(H))`` suffice, where ``s(H)`` is the least
``s`` with ``|E| <= s(s-1)/2``. The procedure takes the largest color ``c`` in
any list, gives it to a maximum-degree holder ``v``, drops the hyperedges
through ``v`` and strikes ``c`` from the lists of their other vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantBreach, ListTooSmall
from .hypergraph import Hypergraph, as_lists, s_of_count, verify_from_lists, verify_um


def required_sizes(H: Hypergraph) -> list[int]:
    s = s_of_count(H.n_edges)
    return [min(d + 1, s) for d in H.degrees()]


@dataclass(frozen=True)
class FewEdgesStep:
    v: int
    c: int
    removed_edges: int
    s_before: int
    s_after: int


@dataclass(frozen=True)
class FewEdgesResult:
    coloring: tuple[int, ...]
    steps: tuple[FewEdgesStep, ...]
    verified: bool | None


def _check_condition(remaining, uncolored, edges, n) -> None:
    s = s_of_count(len(edges))
    deg = [0] * n
    for e in edges:
        for v in e:
            deg[v] += 1
    for u in uncolored:
        if len(remaining[u]) < min(deg[u] + 1, s):
            raise InvariantBreach(
                f"vertex {u} holds {len(remaining[u])} colors, needs min({deg[u]}+1, {s})")


def um_color_few_edges(H: Hypergraph, lists, *, verify: bool = True) -> FewEdgesResult:
    """Unique-maximum color ``H`` from ``lists`` sized at least ``min(deg+1, s(H))``.

    The list condition is checked up front (:class:`ListTooSmall`) and again
    for the residual hypergraph after every step (:class:`InvariantBreach`).
    """
    family = as_lists(lists, H.n)
    for v, need in enumerate(required_sizes(H)):
        if len(family[v]) < need:
            raise ListTooSmall(v, len(family[v]), need)
    n = H.n
    remaining = [set(lst) for lst in family]
    edges = list(H.edges)
    uncolored = set(range(n))
    colors = [0] * n
    steps = []
    while uncolored:
        c = max(max(remaining[v]) for v in uncolored)
        deg = [0] * n
        for e in edges:
            for u in e:
                deg[u] += 1
        holders = [v for v in sorted(uncolored) if c in remaining[v]]
        v = max(holders, key=lambda u: (deg[u], -u))
        colors[v] = c
        uncolored.discard(v)
        through = [e for e in edges if v in e]
        neighbors = {u for e in through for u in e} - {v}
        for u in neighbors:
            remaining[u].discard(c)
        s_before = s_of_count(len(edges))
        edges = [e for e in edges if v not in e]
        s_after = s_of_count(len(edges))
        if s_after == s_before > 1 and not len(through) < s_before - 1:
            raise InvariantBreach(f"removed {len(through)} edges without lowering s={s_before}")
        _check_condition(remaining, uncolored, edges, n)
        steps.append(FewEdgesStep(v, c, len(through), s_before, s_after))
    coloring = tuple(colors)
    verified = None
    if verify:
        verified = bool(verify_um(H, coloring)) and verify_from_lists(coloring, family)
    return FewEdgesResult(coloring, tuple(steps), verified)

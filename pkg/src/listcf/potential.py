"""List unique-maximum coloring driven by a potential function.

Colors are processed in increasing order. For the current color ``c`` the
uncolored vertices holding ``c`` are properly k-colored by an auxiliary
hereditary colorer, and the class with the largest potential
``sum((k-1)/k) ** r(v)`` (``r`` = remaining list size) receives ``c``; the
rest of those vertices lose ``c``. Choosing the heaviest class keeps the total
potential from increasing, so a family with initial potential below one never
exhausts a list.

All potential arithmetic is exact. With ``R`` the largest list size, the
weight ``((k-1)/k) ** r`` is kept as the integer ``(k-1)**r * k**(R-r)`` over
the common denominator ``k**R``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import ColorerViolation, InputError, InvariantBreach, ListExhausted
from .hypergraph import (
    Hypergraph,
    as_lists,
    induce,
    verify_from_lists,
    verify_proper,
    verify_um,
)


@dataclass(frozen=True)
class HereditaryColorer:
    """A proper colorer guaranteed to use at most ``k`` classes on every
    induced subhypergraph.

    ``color_subhypergraph(sub, ids)`` receives the induced subhypergraph and
    the parent ids of its vertices and returns an object with a ``coloring``
    attribute (one positive label per vertex of ``sub``).
    """

    k: int
    color_subhypergraph: Callable
    name: str = "custom"


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class IterationRecord:
    t: int
    c: int
    vc_size: int
    class_sizes: tuple[int, ...]
    class_potentials: tuple[Fraction, ...] | None
    chosen: int
    colored: tuple[int, ...]
    potential_before: Fraction | None
    potential_after: Fraction | None

    def to_json(self) -> dict:
        pots = None
        if self.class_potentials is not None:
            pots = [_fraction_str(q) for q in self.class_potentials]
        return {
            "t": self.t,
            "c": self.c,
            "Vc_size": self.vc_size,
            "class_potentials": pots,
            "chosen": self.chosen,
            "P": None if self.potential_before is None else _fraction_str(self.potential_before),
            "P_next": None if self.potential_after is None else _fraction_str(self.potential_after),
        }


@dataclass
class PotentialTrace:
    k: int
    iterations: list[IterationRecord] = field(default_factory=list)

    def potentials(self) -> list[Fraction]:
        """P_1, P_2, ... including the value after the last iteration."""
        if not self.iterations or self.iterations[0].potential_before is None:
            return []
        out = [rec.potential_before for rec in self.iterations]
        out.append(self.iterations[-1].potential_after)
        return out

    def is_monotone(self) -> bool:
        ps = self.potentials()
        return all(b <= a for a, b in zip(ps, ps[1:]))

    def to_json(self) -> dict:
        return {"k": self.k, "iterations": [rec.to_json() for rec in self.iterations]}


@dataclass(frozen=True)
class UmListResult:
    coloring: tuple[int, ...]
    trace: PotentialTrace
    verified: bool | None
    condition_held: bool
    initial_potential: Fraction | None


def check_list_condition(lists, k: int) -> tuple[bool, Fraction]:
    """Exact value of ``sum(((k-1)/k) ** |L_v|)`` and whether it is below 1."""
    if not isinstance(k, int) or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k!r}")
    family = as_lists(lists)
    q = Fraction(k - 1, k)
    total = sum((q ** len(lst) for lst in family), Fraction(0))
    return total < 1, total


def um_choice_bound(n: int, k: int) -> int:
    """Least uniform list size ``l`` with ``n * ((k-1)/k) ** l < 1``."""
    if n < 1 or k < 2:
        raise InputError("need n >= 1 and k >= 2")
    ell = 0
    while n * (k - 1) ** ell >= k ** ell:
        ell += 1
    return ell


def um_color_from_lists(
    H: Hypergraph,
    lists,
    colorer: HereditaryColorer,
    *,
    check_colorer: bool = True,
    verify: bool = True,
) -> UmListResult:
    """Unique-maximum color ``H`` from ``lists`` using the potential rule.

    Raises :class:`ListExhausted` if an uncolored vertex loses its last color
    (only possible when the list condition fails at entry) and
    :class:`ColorerViolation` if the auxiliary colorer returns more than ``k``
    classes or a non-proper coloring of the induced subhypergraph.
    """
    family = as_lists(lists, H.n)
    k = colorer.k
    if not isinstance(k, int) or k < 1:
        raise InputError(f"colorer must declare k >= 1, got {k!r}")
    n = H.n
    remaining = [set(lst) for lst in family]
    uncolored = set(range(n))
    colors = [0] * n
    trace = PotentialTrace(k)

    weighted = k >= 2
    if weighted:
        condition_held, initial = check_list_condition(family, k)
        top = max((len(lst) for lst in family), default=0)
        denom = k ** top
        # weight[r] == ((k-1)/k)**r * denom
        weight = [(k - 1) ** r * k ** (top - r) for r in range(top + 1)]
        P = sum(weight[len(lst)] for lst in family)
    else:
        condition_held, initial = True, None

    t = 0
    while uncolored:
        t += 1
        c = min(min(remaining[v]) for v in uncolored)
        vc = sorted(v for v in uncolored if c in remaining[v])
        sub = induce(H, vc)
        cert = colorer.color_subhypergraph(sub.hypergraph, sub.ids)
        if cert is None:
            raise ColorerViolation(f"colorer found no proper {k}-coloring at iteration {t}")
        labels = list(cert.coloring)
        if len(labels) != len(vc):
            raise ColorerViolation("colorer returned a coloring of the wrong length")
        distinct = sorted(set(labels))
        if len(distinct) > k:
            raise ColorerViolation(f"colorer used {len(distinct)} classes, more than k={k}")
        if check_colorer and not verify_proper(sub.hypergraph, labels):
            raise ColorerViolation(f"auxiliary coloring at iteration {t} is not proper")
        slot = {lab: i for i, lab in enumerate(distinct)}
        classes: list[list[int]] = [[] for _ in distinct]
        for v, lab in zip(vc, labels):
            classes[slot[lab]].append(v)

        if weighted:
            pots = [sum(weight[len(remaining[v])] for v in cls) for cls in classes]
            chosen = max(range(len(classes)), key=lambda i: (pots[i], -i))
            if k * pots[chosen] < sum(pots):
                raise InvariantBreach("heaviest class below the pigeonhole share")
        else:
            pots = None
            chosen = 0
        winners = classes[chosen]

        for v in winners:
            colors[v] = c
            uncolored.discard(v)
        losers = [v for i, cls in enumerate(classes) if i != chosen for v in cls]
        P_before = P if weighted else None
        for v in losers:
            r = len(remaining[v])
            remaining[v].discard(c)
            if not remaining[v]:
                trace.iterations.append(_record(t, c, vc, classes, pots, chosen, winners,
                                                P_before, None, weighted and denom))
                raise ListExhausted(v, t, partial=tuple(colors), trace=trace)
            if weighted:
                P += weight[r - 1] - weight[r]
        if weighted:
            P -= sum(weight[len(remaining[v])] for v in winners)
            if P > P_before:
                raise InvariantBreach(f"potential increased at iteration {t}")
        trace.iterations.append(_record(t, c, vc, classes, pots, chosen, winners,
                                        P_before, P if weighted else None, weighted and denom))

    coloring = tuple(colors)
    verified = None
    if verify:
        verified = bool(verify_um(H, coloring)) and verify_from_lists(coloring, family)
    return UmListResult(coloring, trace, verified, condition_held, initial)


def _record(t, c, vc, classes, pots, chosen, winners, p_before, p_after, denom):
    frac = (lambda x: Fraction(x, denom)) if denom else (lambda x: None)
    return IterationRecord(
        t=t,
        c=c,
        vc_size=len(vc),
        class_sizes=tuple(len(cls) for cls in classes),
        class_potentials=None if pots is None else tuple(Fraction(p, denom) for p in pots),
        chosen=chosen,
        colored=tuple(winners),
        potential_before=None if p_before is None else frac(p_before),
        potential_after=None if p_after is None else frac(p_after),
    )


def uniform_theorem_lists(n: int, k: int, start: int = 1) -> list[list[int]]:
    ell = um_choice_bound(n, k)
    return [list(range(start, start + ell)) for _ in range(n)]

"""Results specific to the discrete interval hypergraph H_n.

* divide and conquer cf list coloring from lists of size ``floor(log2 n) + 1``;
* the family of lists showing that the unique-maximum list bound is tight,
  and an exhaustive search to confirm that no coloring exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from . import kernels
from .errors import GuardExceeded, InputError, InvariantBreach, ListTooSmall
from .hypergraph import (
    ColorListFamily,
    Hypergraph,
    IntervalHypergraph,
    as_lists,
    verify_cf,
    verify_from_lists,
)

BRUTE_FORCE_GUARD = 10 ** 7


def log2_floor(n: int) -> int:
    return n.bit_length() - 1


def ruler_coloring(n: int) -> tuple[int, ...]:
    """Color of position ``i`` (1-based) is one plus the 2-adic valuation of ``i``.

    Unique-maximum (hence cf) on H_n with ``floor(log2 n) + 1`` colors.
    """
    return tuple(((i & -i).bit_length()) for i in range(1, n + 1))


def cf_color_intervals_median(n: int, lists, *, verify: bool = True) -> tuple[int, ...]:
    """cf-color H_n: the (lower) median of each segment takes its smallest
    remaining color, which is then struck from the rest of the segment."""
    family = as_lists(lists, n)
    need = log2_floor(n) + 1 if n else 0
    for v, lst in enumerate(family):
        if len(lst) < need:
            raise ListTooSmall(v, len(lst), need)
    remaining = [set(lst) for lst in family]
    colors = [0] * n
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if lo > hi:
            continue
        mid = (lo + hi) // 2
        if not remaining[mid]:
            raise InvariantBreach(f"list of vertex {mid} emptied by striking")
        c = min(remaining[mid])
        colors[mid] = c
        for u in range(lo, hi + 1):
            if u != mid:
                remaining[u].discard(c)
        stack.append((mid + 1, hi))
        stack.append((lo, mid - 1))
    out = tuple(colors)
    if verify:
        H = IntervalHypergraph(range(n))
        if not (verify_cf(H, out) and verify_from_lists(out, family)):
            raise InvariantBreach("median coloring failed verification")
    return out


@dataclass(frozen=True)
class TightnessInstance:
    sizes: tuple[int, ...]
    lists: ColorListFamily

    @property
    def hypergraph(self) -> IntervalHypergraph:
        return IntervalHypergraph(range(len(self.sizes)))


def tightness_sum(sizes) -> Fraction:
    return sum((Fraction(1, 2 ** x) for x in sizes), Fraction(0))


def make_tightness_instance(sizes) -> TightnessInstance:
    """Lists ``{x_1 + 1 - x_i, ..., x_1}`` for non-increasing sizes with
    ``sum 2**-x_i >= 1``; no unique-maximum coloring of H_n exists from them."""
    sizes = tuple(sizes)
    if not sizes:
        raise InputError("sizes must be nonempty")
    if any(not isinstance(x, int) or x < 1 for x in sizes):
        raise InputError("sizes must be positive integers")
    if any(b > a for a, b in zip(sizes, sizes[1:])):
        raise InputError("sizes must be non-increasing")
    if tightness_sum(sizes) < 1:
        raise InputError(f"sum of 2^-x_i is {tightness_sum(sizes)}, below 1")
    top = sizes[0]
    return TightnessInstance(sizes, ColorListFamily([range(top + 1 - x, top + 1) for x in sizes]))


def brute_force_um_list_colorable(H: Hypergraph, lists, guard: int = BRUTE_FORCE_GUARD):
    """Exhaustive search for a unique-maximum coloring from ``lists``.

    Returns ``(True, coloring)`` with the lexicographically first such
    coloring, or ``(False, None)``.
    """
    family = as_lists(lists, H.n)
    if prod(len(lst) for lst in family) > guard:
        raise GuardExceeded(f"list product exceeds {guard}")
    found = kernels.search_lists(family.lists, H.edges, "um")
    if found is None:
        return False, None
    return True, tuple(found)

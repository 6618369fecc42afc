"""From chromatic number to choice number for refinement-closed notions.

Given a valid coloring with ``k`` classes (cf or proper, both closed under
splitting classes), every color of the lists' union is sent to a uniformly
random class and each vertex keeps only the colors sent to its own class. If
no pruned list is empty, picking any pruned color per vertex refines the base
coloring and is therefore valid. With lists of size ``floor(k ln n) + 1`` a
draw fails with probability at most ``n (1 - 1/k) ** l``, so redrawing
terminates quickly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ImprobableFailure, InputError, ListTooSmall
from .hypergraph import Hypergraph, as_coloring, as_lists, verify_cf, verify_proper

REDRAW_CAP = 10 ** 6
_BASE_VERIFIERS = {"cf": verify_cf, "proper": verify_proper}


def is_refinement(finer, coarser) -> bool:
    """True iff vertices in different classes of ``coarser`` differ in ``finer``."""
    if len(finer) != len(coarser):
        raise InputError("colorings are defined on different vertex sets")
    back: dict = {}
    for a, b in zip(finer, coarser):
        if back.setdefault(a, b) != b:
            return False
    return True


def required_list_size(n: int, k: int) -> int:
    # a single class keeps every color, so one suffices
    if n <= 1 or k <= 1:
        return 1
    return math.floor(k * math.log(n)) + 1


def failure_bound(n: int, k: int, ell: int) -> Fraction:
    """Union bound on the probability that one draw leaves some list empty."""
    return n * Fraction(k - 1, k) ** ell


@dataclass(frozen=True)
class PartitionWitness:
    base_coloring: tuple[int, ...]
    class_of_color: dict
    pruned_lists: tuple[tuple[int, ...], ...]
    attempts: int

    def to_json(self) -> dict:
        return {
            "base_coloring": list(self.base_coloring),
            "class_of_color": {str(c): i for c, i in sorted(self.class_of_color.items())},
            "pruned_lists": [list(lst) for lst in self.pruned_lists],
            "attempts": self.attempts,
        }


def _generator(seed: int, attempt: int) -> np.random.Generator:
    # Philox is counter based: the (seed, attempt) key fixes the stream.
    key = ((seed % 2 ** 64) << 64) | attempt
    return np.random.Generator(np.random.Philox(key=key))


def draw_partition(palette, k: int, seed: int, attempt: int) -> dict:
    classes = _generator(seed, attempt).integers(0, k, size=len(palette))
    return {c: int(i) for c, i in zip(palette, classes)}


def choice_from_chromatic(H: Hypergraph, base, lists, mode: str, seed: int, *,
                          max_redraws: int = REDRAW_CAP, check_sizes: bool = True):
    """List-color ``H`` in ``mode`` ("cf" or "proper") from a valid base coloring.

    Returns ``(coloring, witness)``; ``witness.attempts`` counts draws
    including the successful one.
    """
    if mode not in _BASE_VERIFIERS:
        raise InputError(f"mode must be 'cf' or 'proper', got {mode!r}")
    base = as_coloring(base, H.n)
    family = as_lists(lists, H.n)
    if not _BASE_VERIFIERS[mode](H, base):
        raise InputError(f"base coloring is not a valid {mode} coloring")
    labels = sorted(set(base))
    k = len(labels)
    class_of_vertex = [labels.index(c) for c in base]
    if check_sizes:
        need = required_list_size(H.n, k)
        for v, lst in enumerate(family):
            if len(lst) < need:
                raise ListTooSmall(v, len(lst), need)
    palette = family.union()
    witness = None
    for attempt in range(max_redraws):
        assign = draw_partition(palette, k, seed, attempt)
        pruned = tuple(tuple(c for c in lst if assign[c] == class_of_vertex[v])
                       for v, lst in enumerate(family))
        witness = PartitionWitness(base, assign, pruned, attempt + 1)
        if all(pruned):
            return tuple(lst[0] for lst in pruned), witness
    raise ImprobableFailure(max_redraws, witness)

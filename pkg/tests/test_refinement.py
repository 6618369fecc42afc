from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hypergraph_and_coloring
from listcf import Hypergraph, ImprobableFailure, InputError, IntervalHypergraph, ListTooSmall
from listcf.hypergraph import verify_cf, verify_from_lists, verify_proper, verify_um
from listcf.intervals import ruler_coloring
from listcf.refinement import (
    choice_from_chromatic,
    draw_partition,
    failure_bound,
    is_refinement,
    required_list_size,
)


def refine_randomly(colors, rng):
    """Split every class at random into fresh colors."""
    out, fresh = [], max(colors) + 1
    split = {}
    for c in colors:
        parts = split.setdefault(c, [fresh + len(split) * 10 + i for i in range(rng.randint(1, 3))])
        out.append(rng.choice(parts))
    return tuple(out)


class TestIsRefinement:
    def test_examples(self):
        assert is_refinement((3, 3, 4), (1, 1, 2))
        assert not is_refinement((5, 5), (1, 2))
        assert is_refinement((1, 2, 1), (1, 2, 1))

    def test_domains(self):
        with pytest.raises(InputError):
            is_refinement((1,), (1, 2))

    @given(hypergraph_and_coloring(), st.integers(0, 10 ** 6))
    def test_closure_cf_proper(self, hc, seed):
        H, c = hc
        finer = refine_randomly(c, random.Random(seed))
        assert is_refinement(finer, c)
        if verify_cf(H, c):
            assert verify_cf(H, finer)
        if verify_proper(H, c):
            assert verify_proper(H, finer)


def test_um_not_closed():
    H = IntervalHypergraph(range(3))
    C, finer = (1, 2, 1), (3, 1, 3)
    assert verify_um(H, C) and is_refinement(finer, C)
    assert not verify_um(H, finer)


class TestChoice:
    def test_H4(self):
        H = IntervalHypergraph(range(4))
        base = ruler_coloring(4)
        assert base == (1, 2, 1, 3) and verify_cf(H, base)
        assert required_list_size(4, 3) == 5
        lists = [range(1, 6)] * 4
        colors, witness = choice_from_chromatic(H, base, lists, "cf", seed=0)
        assert verify_cf(H, colors) and verify_from_lists(colors, lists)
        assert is_refinement(colors, base)
        assert colors == (2, 1, 2, 3) and witness.attempts == 2
        json.dumps(witness.to_json())

    def test_edgeless_single_class(self):
        colors, witness = choice_from_chromatic(Hypergraph(3), (1, 1, 1), [[4], [5], [6]], "cf", seed=9)
        assert colors == (4, 5, 6) and witness.attempts == 1
        assert witness.pruned_lists == ((4,), (5,), (6,))

    def test_triangle_proper(self):
        H = Hypergraph(3, [[0, 1], [1, 2], [0, 2]])
        assert required_list_size(3, 3) == 4
        lists = [[1, 2, 3, 4], [2, 3, 4, 5], [1, 3, 5, 7]]
        colors, _ = choice_from_chromatic(H, (1, 2, 3), lists, "proper", seed=4)
        assert verify_proper(H, colors) and verify_from_lists(colors, lists)

    def test_witness_properties(self):
        H = IntervalHypergraph(range(7))
        base = ruler_coloring(7)
        lists = [random.Random(v).sample(range(1, 20), 6) for v in range(7)]
        colors, w = choice_from_chromatic(H, base, lists, "cf", seed=2)
        labels = sorted(set(base))
        for v in range(7):
            assert set(w.pruned_lists[v]) <= set(lists[v])
            assert all(w.class_of_color[c] == labels.index(base[v]) for c in w.pruned_lists[v])
            assert colors[v] in w.pruned_lists[v]

    def test_invalid_base(self):
        with pytest.raises(InputError):
            choice_from_chromatic(Hypergraph(2, [[0, 1]]), (1, 1), [[1, 2]] * 2, "cf", 0)

    def test_small_lists(self):
        with pytest.raises(ListTooSmall):
            choice_from_chromatic(IntervalHypergraph(range(4)), (1, 2, 1, 3), [[1, 2]] * 4, "cf", 0)

    def test_cap(self):
        H = Hypergraph(2, [[0, 1]])
        with pytest.raises(ImprobableFailure) as info:
            choice_from_chromatic(H, (1, 2), [[1], [1]], "proper", 0, check_sizes=False, max_redraws=5)
        assert info.value.witness.attempts == 5

    def test_replayable(self):
        a = draw_partition(list(range(1, 30)), 4, seed=17, attempt=3)
        assert a == draw_partition(list(range(1, 30)), 4, seed=17, attempt=3)
        assert a != draw_partition(list(range(1, 30)), 4, seed=17, attempt=4)

    def test_redraw_rate_below_union_bound(self):
        n, k = 6, 3
        H = IntervalHypergraph(range(n))
        base = (1, 2, 1, 3, 1, 2)
        ell = required_list_size(n, k)
        failures = attempts = 0
        for seed in range(1000):
            lists = [random.Random(seed * 31 + v).sample(range(1, 3 * ell), ell) for v in range(n)]
            _, w = choice_from_chromatic(H, base, lists, "cf", seed)
            attempts += w.attempts
            failures += w.attempts - 1
        assert failures / attempts <= float(failure_bound(n, k, ell))

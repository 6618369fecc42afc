from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hypergraphs
from listcf import ColorerViolation, Hypergraph, InputError, IntervalHypergraph, ListExhausted
from listcf.colorers import exact_colorer, hereditary_chromatic_number, interval_colorer
from listcf.hypergraph import verify_um
from listcf.oracle import naive_list_colorable
from listcf.potential import (
    HereditaryColorer,
    check_list_condition,
    um_choice_bound,
    um_color_from_lists,
    uniform_theorem_lists,
)


def H_n(n):
    return IntervalHypergraph(range(n))


class TestCondition:
    def test_examples(self):
        assert check_list_condition([[1, 2, 3]] * 4, 2) == (True, Fraction(1, 2))
        assert check_list_condition([[1], [2]], 2) == (False, Fraction(1))
        ok, total = check_list_condition([range(1, 11)] * 10, 4)
        assert ok and total == 10 * Fraction(3, 4) ** 10
        assert abs(float(total) - 0.563) < 1e-3

    def test_k_below_two(self):
        with pytest.raises(InputError):
            check_list_condition([[1]], 1)

    @pytest.mark.parametrize("n, k, ell", [(1024, 2, 11), (1, 2, 1), (1, 5, 1), (100, 4, 17),
                                           (9, 4, 8), (8, 4, 8), (255, 2, 8), (256, 2, 9)])
    def test_choice_bound(self, n, k, ell):
        assert um_choice_bound(n, k) == ell

    @given(st.integers(1, 3000), st.integers(2, 6))
    def test_choice_bound_is_least(self, n, k):
        ell = um_choice_bound(n, k)
        q = Fraction(k - 1, k)
        assert n * q ** ell < 1
        assert ell == 0 or n * q ** (ell - 1) >= 1


class TestRun:
    def test_hand_trace_H3(self):
        res = um_color_from_lists(H_n(3), [[1, 2]] * 3, interval_colorer())
        assert res.coloring == (1, 2, 1)
        assert res.verified
        first, second = res.trace.iterations
        assert first.c == 1 and first.vc_size == 3
        assert first.class_potentials == (Fraction(1, 2), Fraction(1, 4))
        assert first.chosen == 0 and first.colored == (0, 2)
        assert second.c == 2 and second.colored == (1,)
        assert res.trace.potentials() == [Fraction(3, 4), Fraction(1, 2), Fraction(0)]

    def test_edgeless(self):
        res = um_color_from_lists(Hypergraph(3), [[4, 9], [2], [7, 8]], exact_colorer(2))
        assert res.coloring == (4, 2, 7) and res.verified

    def test_H255_eight_colors(self):
        res = um_color_from_lists(H_n(255), [range(1, 9)] * 255, interval_colorer())
        assert res.verified and res.condition_held
        assert res.trace.is_monotone()

    def test_trace_json(self):
        res = um_color_from_lists(H_n(3), [[1, 2]] * 3, interval_colorer())
        doc = json.loads(json.dumps(res.trace.to_json()))
        assert doc["iterations"][0] == {"t": 1, "c": 1, "Vc_size": 3, "class_potentials": ["1/2", "1/4"],
                                        "chosen": 0, "P": "3/4", "P_next": "1/2"}

    def test_exhaustion_surfaced(self):
        with pytest.raises(ListExhausted) as info:
            um_color_from_lists(H_n(2), [[1], [1]], interval_colorer())
        assert info.value.vertex == 1
        assert info.value.trace.iterations

    def test_unsound_colorer_rejected(self):
        lazy = HereditaryColorer(2, lambda sub, ids: type("C", (), {"coloring": [1] * sub.n})(), "lazy")
        with pytest.raises(ColorerViolation):
            um_color_from_lists(H_n(3), [[1, 2]] * 3, lazy)

    def test_too_many_classes_rejected(self):
        greedy = HereditaryColorer(2, lambda sub, ids: type("C", (), {"coloring": list(range(1, sub.n + 1))})())
        with pytest.raises(ColorerViolation):
            um_color_from_lists(H_n(4), [[1, 2, 3]] * 4, greedy)

    def test_infeasible_colorer_rejected(self):
        triangle = Hypergraph(3, [[0, 1], [1, 2], [0, 2]])
        with pytest.raises(ColorerViolation):
            um_color_from_lists(triangle, [[1, 2, 3, 4, 5]] * 3, exact_colorer(2))

    def test_deterministic(self):
        a = um_color_from_lists(H_n(40), uniform_theorem_lists(40, 2, start=3), interval_colorer())
        b = um_color_from_lists(H_n(40), uniform_theorem_lists(40, 2, start=3), interval_colorer())
        assert a.coloring == b.coloring
        assert a.trace.to_json() == b.trace.to_json()

    @given(hypergraphs(max_n=6, max_edges=10), st.data())
    def test_condition_implies_success(self, H, data):
        k = max(hereditary_chromatic_number(H), 2)
        bound = um_choice_bound(H.n, k)
        lists = [sorted(data.draw(st.sets(st.integers(1, bound + 3), min_size=bound, max_size=bound)))
                 for _ in range(H.n)]
        res = um_color_from_lists(H, lists, exact_colorer(k))
        assert res.verified and res.condition_held
        assert res.trace.is_monotone()
        assert res.trace.potentials()[0] < 1
        assert naive_list_colorable(H, lists, "um") is not None

    @given(st.integers(1, 40), st.integers(0, 50), st.data())
    def test_monotone_with_short_lists(self, n, shift, data):
        # lists below the bound may fail, but any completed prefix never raises potential
        sizes = data.draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))
        lists = [range(shift + 1, shift + 1 + s) for s in sizes]
        try:
            res = um_color_from_lists(H_n(n), lists, interval_colorer())
        except ListExhausted as exc:
            trace = exc.trace
        else:
            assert verify_um(H_n(n), res.coloring)
            trace = res.trace
        pots = [rec.potential_before for rec in trace.iterations]
        assert all(b <= a for a, b in zip(pots, pots[1:]))

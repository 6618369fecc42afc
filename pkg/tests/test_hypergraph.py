from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hypergraph_and_coloring, hypergraphs
from listcf import (
    ColorListFamily,
    Hypergraph,
    InputError,
    IntervalHypergraph,
    delaunay_graph,
    degree,
    induce,
    s_of,
    verify_cf,
    verify_from_lists,
    verify_proper,
    verify_um,
)
from listcf.oracle import naive_valid


def H_n(n):
    return IntervalHypergraph(range(n))


class TestConstruction:
    def test_edges_sorted_and_deduplicated(self):
        H = Hypergraph(3, [[1, 0], [0, 1], [2], [2, 0, 1]])
        assert H.edges == ((0, 1), (2,), (0, 1, 2))

    def test_rejects_out_of_range_and_empty(self):
        with pytest.raises(InputError):
            Hypergraph(2, [[0, 2]])
        with pytest.raises(InputError):
            Hypergraph(2, [[]])

    def test_lists_validated(self):
        with pytest.raises(InputError):
            ColorListFamily([[1], []])
        with pytest.raises(InputError):
            ColorListFamily([[0, 1]])
        assert ColorListFamily([[3, 1, 3]]).lists == ((1, 3),)

    def test_interval_edges_lazy_and_complete(self):
        H = H_n(4)
        assert H.n_edges == 10
        assert H.edges == Hypergraph(4, [range(s, t + 1) for s in range(4) for t in range(s, 4)]).edges


class TestInduce:
    def test_remaps_ids(self):
        sub = induce(Hypergraph(3, [[0, 1], [0, 1, 2]]), [0, 2])
        assert sub.hypergraph.n == 2
        assert sub.hypergraph.edges == ((0,), (0, 1))
        assert sub.ids == (0, 2)

    def test_identity(self):
        H = Hypergraph(3, [[0, 1], [1, 2]])
        assert induce(H, range(3)).hypergraph == H

    def test_disjoint_edges(self):
        assert induce(Hypergraph(4, [[0, 1], [2, 3]]), [0, 2]).hypergraph.edges == ((0,), (1,))

    def test_invalid_vertex(self):
        with pytest.raises(InputError):
            induce(Hypergraph(2, [[0, 1]]), [5])

    def test_interval_induce_keeps_positions(self):
        sub = induce(H_n(6), [1, 3, 4])
        assert isinstance(sub.hypergraph, IntervalHypergraph)
        assert sub.hypergraph.positions == (1, 3, 4)

    @given(hypergraphs(), st.data())
    def test_induce_composes(self, H, data):
        outer = data.draw(st.sets(st.integers(0, H.n - 1)))
        inner = data.draw(st.sets(st.sampled_from(sorted(outer)))) if outer else set()
        first = induce(H, outer)
        local = [first.index[v] for v in inner]
        twice = induce(first.hypergraph, local)
        assert set(twice.hypergraph.edges) == set(induce(H, inner).hypergraph.edges)
        assert first.to_parent(twice.ids) == sorted(inner)


class TestStatistics:
    def test_delaunay_examples(self):
        assert delaunay_graph(Hypergraph(3, [[0, 1], [0, 1, 2], [2]])).edges == {(0, 1)}
        assert delaunay_graph(Hypergraph(3, [])).edges == frozenset()
        generic = Hypergraph(4, H_n(4).edges)
        assert delaunay_graph(generic).edges == {(0, 1), (1, 2), (2, 3)}
        assert delaunay_graph(H_n(4)).edges == delaunay_graph(generic).edges

    def test_degree_examples(self):
        assert degree(Hypergraph(3, [[0, 1], [0, 1, 2]]), 0) == 2
        assert degree(Hypergraph(3, []), 1) == 0
        assert degree(H_n(3), 1) == 4
        assert Hypergraph(5, H_n(5).edges).degrees() == H_n(5).degrees()

    def test_degree_bad_id(self):
        with pytest.raises(InputError):
            degree(Hypergraph(2, []), 2)

    @pytest.mark.parametrize("m, s", [(0, 1), (1, 2), (4, 4), (3, 3), (6, 4), (7, 5)])
    def test_s_of(self, m, s):
        edges = [[i] for i in range(m)]
        assert s_of(Hypergraph(max(m, 1), edges)) == s

    @given(st.integers(1, 60))
    def test_s_of_bracket(self, m):
        s = s_of(Hypergraph(m, [[i] for i in range(m)]))
        assert (s - 1) * (s - 2) // 2 < m <= s * (s - 1) // 2


class TestVerdicts:
    def test_proper_examples(self):
        H = Hypergraph(2, [[0, 1]])
        assert verify_proper(H, (1, 2))
        bad = verify_proper(H, (1, 1))
        assert not bad and bad.witness == (0, 1)
        assert verify_proper(Hypergraph(3, [[0], [0, 1, 2]]), (1, 1, 2))

    def test_cf_examples(self):
        assert verify_cf(Hypergraph(3, [[0, 1, 2]]), (1, 1, 2))
        bad = verify_cf(Hypergraph(4, [[0, 1, 2, 3]]), (1, 1, 2, 2))
        assert not bad and bad.witness == (0, 1, 2, 3)
        assert verify_cf(H_n(3), (1, 2, 1))

    def test_um_examples(self):
        assert verify_um(Hypergraph(3, [[0, 1], [0, 1, 2]]), (1, 2, 1))
        assert not verify_um(Hypergraph(3, [[0, 1, 2]]), (2, 1, 2))
        assert verify_um(H_n(3), (1, 2, 1))
        bad = verify_um(H_n(3), (2, 1, 2))
        assert not bad and bad.witness == (0, 1, 2)

    def test_from_lists_examples(self):
        assert verify_from_lists((1, 2), [[1], [2]])
        assert not verify_from_lists((1, 2), [[1], [3]])
        assert verify_from_lists((5, 5, 5), [[5]] * 3)

    def test_partial_coloring_rejected(self):
        with pytest.raises(InputError):
            verify_cf(Hypergraph(2, [[0, 1]]), (1,))

    @given(hypergraph_and_coloring())
    def test_chain(self, hc):
        H, c = hc
        if verify_um(H, c):
            assert verify_cf(H, c)
        if verify_cf(H, c):
            assert verify_proper(H, c)

    @given(hypergraph_and_coloring())
    def test_verdicts_match_naive(self, hc):
        H, c = hc
        assert bool(verify_proper(H, c)) == naive_valid(H, c, "proper")
        assert bool(verify_cf(H, c)) == naive_valid(H, c, "cf")
        assert bool(verify_um(H, c)) == naive_valid(H, c, "um")

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=9))
    def test_interval_fast_path_matches_generic(self, colors):
        n = len(colors)
        generic = Hypergraph(n, H_n(n).edges)
        for check in (verify_proper, verify_cf, verify_um):
            a, b = check(H_n(n), colors), check(generic, colors)
            assert a.ok == b.ok and a.witness == b.witness

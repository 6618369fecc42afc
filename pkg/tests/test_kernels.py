"""Compiled and pure-Python kernels must agree exactly."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hypergraph_and_coloring, hypergraphs
from listcf import kernels
from listcf.oracle import dfs_path_vertex_sets, naive_list_colorable
from listcf.planar import grid_graph, random_planar_graph, star_graph

BACKENDS = kernels.available_backends()
needs_compiled = pytest.mark.skipif("compiled" not in BACKENDS, reason="extension not built")


def test_fallback_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_rank_preserves_order():
    ranked, table = kernels.rank([7, 3, 7, 10])
    assert ranked == [1, 0, 1, 2]
    assert table == {3: 0, 7: 1, 10: 2}


@needs_compiled
@given(hypergraph_and_coloring(max_colors=5))
def test_first_violation_parity(hc):
    H, colors = hc
    offsets, flat = H.csr
    for mode in ("proper", "cf", "um"):
        got = {b: kernels.first_violation(offsets, flat, colors, mode, backend=b) for b in BACKENDS}
        assert got["compiled"] == got["python"]


@needs_compiled
@given(st.lists(st.integers(1, 6), min_size=1, max_size=12))
def test_interval_parity(colors):
    for mode in ("proper", "cf", "um"):
        a = kernels.interval_first_violation(colors, mode, backend="compiled")
        b = kernels.interval_first_violation(colors, mode, backend="python")
        assert a == b


@given(hypergraphs(max_n=5, max_edges=8), st.data())
def test_search_matches_product_oracle(H, data):
    lists = [data.draw(st.sets(st.integers(1, 4), min_size=1, max_size=3)) for _ in range(H.n)]
    lists = [sorted(lst) for lst in lists]
    for mode in ("proper", "cf", "um"):
        expected = naive_list_colorable(H, lists, mode)
        for b in BACKENDS:
            found = kernels.search_lists(lists, H.edges, mode, backend=b)
            # both return the first valid assignment in lexicographic order
            assert (None if found is None else tuple(found)) == expected


@given(hypergraphs(max_n=6, max_edges=10), st.integers(1, 4))
def test_symmetric_search_agrees_on_feasibility(H, k):
    palette = list(range(1, k + 1))
    for mode in ("proper", "cf"):
        plain = kernels.search_lists([palette] * H.n, H.edges, mode)
        sym = kernels.search_lists([palette] * H.n, H.edges, mode, symmetric=True)
        assert (plain is None) == (sym is None)


@pytest.mark.parametrize("G", [grid_graph(2, 3), grid_graph(3, 3), star_graph(5),
                               random_planar_graph(8, 4)])
def test_path_masks_match_dfs(G):
    expected = {sum(1 << v for v in s) for s in dfs_path_vertex_sets(G.adj)}
    for b in BACKENDS:
        assert set(kernels.path_vertex_masks(G.n, G.adjmask(), backend=b)) == expected


def test_search_exhaustive_small_product():
    # every assignment of a 3-vertex path to colors {1,2} checked against the oracle
    edges = [(0, 1), (1, 2), (0, 1, 2)]
    for lists in product([(1,), (2,), (1, 2)], repeat=3):
        for b in BACKENDS:
            got = kernels.search_lists(list(lists), edges, "um", backend=b)
            want = naive_list_colorable(type("H", (), {"edges": edges})(), lists, "um")
            assert (None if got is None else tuple(got)) == want

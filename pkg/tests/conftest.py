from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from listcf.hypergraph import Hypergraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=7, max_edges=12):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), max_size=max_edges))
    return Hypergraph(n, edges)


@st.composite
def hypergraph_and_coloring(draw, max_n=7, max_colors=4):
    H = draw(hypergraphs(max_n))
    colors = draw(st.lists(st.integers(1, max_colors), min_size=H.n, max_size=H.n))
    return H, tuple(colors)


ACCEPTANCE: dict = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

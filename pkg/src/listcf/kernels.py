"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled extension ``listcf._speedups`` is used when it imports; setting
``LISTCF_PURE_PYTHON=1`` forces the fallback. Both backends expose the same
raw functions; the wrappers below convert arbitrary positive-integer colors to
dense order-preserving ranks before calling them.
"""

from __future__ import annotations

import os

from . import _kernels_py

PROPER, CF, UM = 0, 1, 2
MODES = {"proper": PROPER, "cf": CF, "um": UM}

_compiled = None
if os.environ.get("LISTCF_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _compiled
    except ImportError:  # extension not built
        _compiled = None

_backend = _compiled if _compiled is not None else _kernels_py
BACKEND = "compiled" if _compiled is not None else "python"


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "compiled")
    return names


def get_backend(name=None):
    """Return the raw kernel module for ``name`` ("compiled" or "python")."""
    if name is None:
        return _backend
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled backend is not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def mode_code(mode):
    if isinstance(mode, int):
        return mode
    try:
        return MODES[mode]
    except KeyError:
        raise ValueError(f"unknown coloring mode {mode!r}") from None


def rank(values):
    """Map each value to its rank among the distinct values (order preserving)."""
    table = {c: i for i, c in enumerate(sorted(set(values)))}
    return [table[c] for c in values], table


def first_violation(offsets, flat, colors, mode, backend=None):
    ranked, _ = rank(colors)
    return get_backend(backend).first_violation(offsets, flat, ranked, mode_code(mode))


def interval_first_violation(colors, mode, backend=None):
    ranked, table = rank(colors)
    return get_backend(backend).interval_first_violation(ranked, mode_code(mode), max(len(table), 1))


def search_lists(lists, edges, mode, symmetric=False, backend=None):
    """Lexicographically first valid coloring of ``edges`` from ``lists``, or None.

    ``lists`` holds one ascending sequence of positive colors per vertex,
    ``edges`` sorted vertex tuples. Vertices are assigned in id order.
    """
    n = len(lists)
    palette = sorted({c for lst in lists for c in lst})
    table = {c: i for i, c in enumerate(palette)}
    list_offsets = [0]
    list_flat = []
    for lst in lists:
        list_flat.extend(table[c] for c in sorted(lst))
        list_offsets.append(len(list_flat))
    edge_offsets = [0]
    edge_flat = []
    by_last = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        edge_flat.extend(e)
        edge_offsets.append(len(edge_flat))
        if e:
            by_last[max(e)].append(i)
    byv_offsets = [0]
    byv_flat = []
    for group in by_last:
        byv_flat.extend(group)
        byv_offsets.append(len(byv_flat))
    raw = get_backend(backend).search(
        list_offsets, list_flat, edge_offsets, edge_flat, byv_offsets, byv_flat,
        mode_code(mode), bool(symmetric), max(len(palette), 1),
    )
    if raw is None:
        return None
    return [palette[c] for c in raw]


def path_vertex_masks(n, adjmask, backend=None):
    return list(get_backend(backend).path_vertex_masks(n, list(adjmask)))

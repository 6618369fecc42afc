"""Pure-Python implementations of the hot kernels.

Every function here has a twin with the same signature in ``_speedups.pyx``.
Colors passed in are dense ranks ``0..m-1`` (order preserving); the wrappers in
:mod:`listcf.kernels` take care of ranking.
"""

from __future__ import annotations

PROPER, CF, UM = 0, 1, 2


def _edge_ok(colors, flat, lo, hi, mode):
    if mode == PROPER:
        if hi - lo < 2:
            return True
        first = colors[flat[lo]]
        for i in range(lo + 1, hi):
            if colors[flat[i]] != first:
                return True
        return False
    if mode == UM:
        best = -1
        count = 0
        for i in range(lo, hi):
            c = colors[flat[i]]
            if c > best:
                best = c
                count = 1
            elif c == best:
                count += 1
        return count == 1
    counts = {}
    for i in range(lo, hi):
        c = colors[flat[i]]
        counts[c] = counts.get(c, 0) + 1
    return 1 in counts.values()


def first_violation(offsets, flat, colors, mode):
    """Index of the first edge (CSR layout) failing ``mode``, or -1."""
    for e in range(len(offsets) - 1):
        if not _edge_ok(colors, flat, offsets[e], offsets[e + 1], mode):
            return e
    return -1


def interval_first_violation(colors, mode, ncolors):
    """First interval ``(s, t)`` (ordered by s, then t) failing ``mode``, or None."""
    n = len(colors)
    if mode == PROPER:
        for i in range(n - 1):
            if colors[i] == colors[i + 1]:
                return (i, i + 1)
        return None
    if mode == UM:
        for s in range(n):
            best = -1
            count = 0
            for t in range(s, n):
                c = colors[t]
                if c > best:
                    best = c
                    count = 1
                elif c == best:
                    count += 1
                    if count == 2:
                        return (s, t)
        return None
    counts = [0] * ncolors
    for s in range(n):
        ones = 0
        for t in range(s, n):
            c = colors[t]
            k = counts[c] + 1
            counts[c] = k
            if k == 1:
                ones += 1
            elif k == 2:
                ones -= 1
            if ones == 0:
                return (s, t)
        for t in range(s, n):
            counts[colors[t]] = 0
    return None


def search(list_offsets, list_flat, edge_offsets, edge_flat, byv_offsets, byv_flat,
           mode, symmetric, ncolors):
    """Depth-first search for a coloring from lists, vertices in id order.

    Edges are checked once their largest vertex is assigned (``byv`` lists,
    per vertex, the edges whose maximum vertex it is). With ``symmetric`` the
    lists are assumed identical and colors are introduced in first-occurrence
    order. Returns the lexicographically smallest valid assignment or None.
    """
    n = len(list_offsets) - 1
    if n == 0:
        return []
    assign = [-1] * n
    pos = [0] * n
    maxused = [-1] * (n + 1)
    v = 0
    while v >= 0:
        if v == n:
            return assign
        end = list_offsets[v + 1]
        placed = False
        while list_offsets[v] + pos[v] < end:
            c = list_flat[list_offsets[v] + pos[v]]
            pos[v] += 1
            if symmetric and c > maxused[v] + 1:
                pos[v] = end - list_offsets[v]
                break
            assign[v] = c
            ok = True
            for j in range(byv_offsets[v], byv_offsets[v + 1]):
                e = byv_flat[j]
                if not _edge_ok(assign, edge_flat, edge_offsets[e], edge_offsets[e + 1], mode):
                    ok = False
                    break
            if ok:
                placed = True
                break
        if placed:
            maxused[v + 1] = max(maxused[v], assign[v])
            v += 1
            if v < n:
                pos[v] = 0
        else:
            assign[v] = -1
            pos[v] = 0
            v -= 1
    return None


def path_vertex_masks(n, adjmask):
    """Bitmasks of all vertex sets that carry a simple path (Hamiltonian-path DP)."""
    size = 1 << n
    reach = [0] * size
    for v in range(n):
        reach[1 << v] = 1 << v
    out = []
    for mask in range(1, size):
        ends = reach[mask]
        if not ends:
            continue
        out.append(mask)
        e = ends
        while e:
            low = e & -e
            v = low.bit_length() - 1
            e ^= low
            free = adjmask[v] & ~mask
            while free:
                lu = free & -free
                free ^= lu
                reach[mask | lu] |= lu
    return out

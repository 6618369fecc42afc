# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_kernels_py``; same signatures."""

from libc.stdlib cimport malloc, calloc, free

DEF PROPER = 0
DEF CF = 1
DEF UM = 2


cdef long* _to_c(seq, Py_ssize_t* length) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef long* buf = <long*>malloc((n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    length[0] = n
    return buf


cdef bint _edge_ok(long* colors, long* flat, long lo, long hi, int mode, long* counts) nogil:
    cdef long i, c, first, best, count, ones
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
    ones = 0
    for i in range(lo, hi):
        counts[colors[flat[i]]] += 1
    for i in range(lo, hi):
        if counts[colors[flat[i]]] == 1:
            ones = 1
        counts[colors[flat[i]]] = 0
    return ones == 1


def first_violation(offsets, flat, colors, int mode):
    cdef Py_ssize_t no, nf, nc
    cdef long* off = _to_c(offsets, &no)
    cdef long* fl = _to_c(flat, &nf)
    cdef long* col = _to_c(colors, &nc)
    cdef long m = 1
    cdef Py_ssize_t i
    for i in range(nc):
        if col[i] + 1 > m:
            m = col[i] + 1
    cdef long* counts = <long*>calloc(m, sizeof(long))
    cdef long e, result = -1
    try:
        with nogil:
            for e in range(no - 1):
                if not _edge_ok(col, fl, off[e], off[e + 1], mode, counts):
                    result = e
                    break
    finally:
        free(off)
        free(fl)
        free(col)
        free(counts)
    return result


def interval_first_violation(colors, int mode, long ncolors):
    cdef Py_ssize_t n
    cdef long* col = _to_c(colors, &n)
    cdef long* counts = <long*>calloc(ncolors + 1, sizeof(long))
    cdef long s, t, c, k, best, count, ones
    cdef long rs = -1, rt = -1
    try:
        with nogil:
            if mode == PROPER:
                for s in range(n - 1):
                    if col[s] == col[s + 1]:
                        rs = s
                        rt = s + 1
                        break
            elif mode == UM:
                for s in range(n):
                    best = -1
                    count = 0
                    for t in range(s, n):
                        c = col[t]
                        if c > best:
                            best = c
                            count = 1
                        elif c == best:
                            count += 1
                            if count == 2:
                                rs = s
                                rt = t
                                break
                    if rs >= 0:
                        break
            else:
                for s in range(n):
                    ones = 0
                    for t in range(s, n):
                        c = col[t]
                        k = counts[c] + 1
                        counts[c] = k
                        if k == 1:
                            ones += 1
                        elif k == 2:
                            ones -= 1
                        if ones == 0:
                            rs = s
                            rt = t
                            break
                    if rs >= 0:
                        break
                    for t in range(s, n):
                        counts[col[t]] = 0
    finally:
        free(col)
        free(counts)
    if rs < 0:
        return None
    return (rs, rt)


def search(list_offsets, list_flat, edge_offsets, edge_flat, byv_offsets, byv_flat,
           int mode, bint symmetric, long ncolors):
    cdef Py_ssize_t nlo, nlf, neo, nef, nbo, nbf
    cdef long* lo = _to_c(list_offsets, &nlo)
    cdef long* lf = _to_c(list_flat, &nlf)
    cdef long* eo = _to_c(edge_offsets, &neo)
    cdef long* ef = _to_c(edge_flat, &nef)
    cdef long* bo = _to_c(byv_offsets, &nbo)
    cdef long* bf = _to_c(byv_flat, &nbf)
    cdef long n = nlo - 1
    cdef long* assign = <long*>malloc((n + 1) * sizeof(long))
    cdef long* pos = <long*>calloc(n + 1, sizeof(long))
    cdef long* maxused = <long*>malloc((n + 2) * sizeof(long))
    cdef long* counts = <long*>calloc(ncolors + 1, sizeof(long))
    cdef long v, end, c, j, e
    cdef bint placed, ok, found = False
    try:
        if n == 0:
            return []
        with nogil:
            for v in range(n):
                assign[v] = -1
            maxused[0] = -1
            v = 0
            while v >= 0:
                if v == n:
                    found = True
                    break
                end = lo[v + 1]
                placed = False
                while lo[v] + pos[v] < end:
                    c = lf[lo[v] + pos[v]]
                    pos[v] += 1
                    if symmetric and c > maxused[v] + 1:
                        pos[v] = end - lo[v]
                        break
                    assign[v] = c
                    ok = True
                    for j in range(bo[v], bo[v + 1]):
                        e = bf[j]
                        if not _edge_ok(assign, ef, eo[e], eo[e + 1], mode, counts):
                            ok = False
                            break
                    if ok:
                        placed = True
                        break
                if placed:
                    maxused[v + 1] = maxused[v] if maxused[v] > assign[v] else assign[v]
                    v += 1
                    if v < n:
                        pos[v] = 0
                else:
                    assign[v] = -1
                    pos[v] = 0
                    v -= 1
        if not found:
            return None
        return [assign[v] for v in range(n)]
    finally:
        free(lo)
        free(lf)
        free(eo)
        free(ef)
        free(bo)
        free(bf)
        free(assign)
        free(pos)
        free(maxused)
        free(counts)


def path_vertex_masks(int n, adjmask):
    if n > 30:
        raise ValueError("n too large for bitmask enumeration")
    cdef unsigned long size = 1UL << n
    cdef unsigned int* reach = <unsigned int*>calloc(size, sizeof(unsigned int))
    cdef unsigned int* adj = <unsigned int*>malloc((n + 1) * sizeof(unsigned int))
    cdef char* hit = <char*>calloc(size, sizeof(char))
    if reach == NULL or adj == NULL or hit == NULL:
        free(reach)
        free(adj)
        free(hit)
        raise MemoryError()
    cdef int v
    cdef unsigned int mask, ends, low, free_, lu
    cdef unsigned long m
    try:
        for v in range(n):
            adj[v] = adjmask[v]
            reach[1U << v] = 1U << v
        with nogil:
            for m in range(1, size):
                mask = <unsigned int>m
                ends = reach[mask]
                if ends == 0:
                    continue
                hit[mask] = 1
                while ends:
                    low = ends & (~ends + 1)
                    ends ^= low
                    v = 0
                    while (1U << v) != low:
                        v += 1
                    free_ = adj[v] & ~mask
                    while free_:
                        lu = free_ & (~free_ + 1)
                        free_ ^= lu
                        reach[mask | lu] |= lu
        return [m for m in range(1, size) if hit[m]]
    finally:
        free(reach)
        free(adj)
        free(hit)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels.py`` (same results)."""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy
from cpython.mem cimport PyMem_Malloc, PyMem_Free

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAXN = 64
DEF MAXQ = 4 * MAXN + 8
DEF MAXAUTO = 2048

MAX_CANON_N = MAXN


def bfs_all_pairs(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices, Py_ssize_t n):
    """All-pairs BFS distances on a CSR adjacency; unreachable pairs are -1."""
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] d = out
    cdef cnp.ndarray[cnp.int64_t, ndim=1] qarr = np.empty(max(n, 1), dtype=np.int64)
    cdef cnp.int64_t[::1] q = qarr
    cdef Py_ssize_t s, head, tail, u, w, k
    cdef int du
    with nogil:
        for s in range(n):
            d[s, s] = 0
            q[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = q[head]
                head += 1
                du = d[s, u] + 1
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if d[s, w] < 0:
                        d[s, w] = du
                        q[tail] = w
                        tail += 1
    return out


cdef struct Canon:
    int n
    uint64_t adj[MAXN]
    # per-depth partitions
    int lab[MAXN + 1][MAXN]
    int cend[MAXN + 1][MAXN]
    int ncells[MAXN + 1]
    int path[MAXN]
    bint have_first
    uint64_t first_cert[MAXN]
    int first_order[MAXN]
    int first_path[MAXN]
    int first_len
    uint64_t best_cert[MAXN]
    int best_order[MAXN]
    int best_path[MAXN]
    int best_len
    int nautos
    signed char autos[MAXAUTO][MAXN]


cdef void refine(Canon* c, int depth, uint64_t* q, int qtail) noexcept nogil:
    cdef int n = c.n
    cdef int* lab = c.lab[depth]
    cdef int* cend = c.cend[depth]
    cdef int qhead = 0
    cdef int i, e, j, k, tmpv, tmpc, start, runs
    cdef int cnt[MAXN]
    cdef uint64_t sp, m
    cdef bint same
    while qhead < qtail and c.ncells[depth] < n:
        sp = q[qhead]
        qhead += 1
        i = 0
        while i < n:
            e = cend[i]
            if e - i > 1:
                same = True
                for j in range(i, e):
                    cnt[j] = __builtin_popcountll(c.adj[lab[j]] & sp)
                    if cnt[j] != cnt[i]:
                        same = False
                if not same:
                    # stable insertion sort of the segment by count
                    for j in range(i + 1, e):
                        tmpv = lab[j]
                        tmpc = cnt[j]
                        k = j - 1
                        while k >= i and cnt[k] > tmpc:
                            lab[k + 1] = lab[k]
                            cnt[k + 1] = cnt[k]
                            k -= 1
                        lab[k + 1] = tmpv
                        cnt[k + 1] = tmpc
                    start = i
                    runs = 0
                    m = 0
                    for j in range(i, e):
                        m |= (<uint64_t>1) << lab[j]
                        if j + 1 == e or cnt[j + 1] != cnt[j]:
                            cend[start] = j + 1
                            if qtail < MAXQ:
                                q[qtail] = m
                                qtail += 1
                            runs += 1
                            start = j + 1
                            m = 0
                    c.ncells[depth] += runs - 1
            i = e


cdef int leaf(Canon* c, int depth) noexcept nogil:
    cdef int n = c.n
    cdef int* lab = c.lab[depth]
    cdef int pos[MAXN]
    cdef uint64_t cert[MAXN]
    cdef uint64_t m, r
    cdef int i, k, which, cmp
    cdef int* ref_order
    cdef int* ref_path
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        m = c.adj[lab[i]]
        r = 0
        while m:
            r |= (<uint64_t>1) << pos[__builtin_ctzll(m)]
            m &= m - 1
        cert[i] = r
    if not c.have_first:
        c.have_first = True
        memcpy(c.first_cert, cert, n * sizeof(uint64_t))
        memcpy(c.first_order, lab, n * sizeof(int))
        memcpy(c.first_path, c.path, depth * sizeof(int))
        c.first_len = depth
        memcpy(c.best_cert, cert, n * sizeof(uint64_t))
        memcpy(c.best_order, lab, n * sizeof(int))
        memcpy(c.best_path, c.path, depth * sizeof(int))
        c.best_len = depth
        return -1
    for which in range(2):
        if which == 0:
            cmp = cert_cmp(cert, c.first_cert, n)
            ref_order = c.first_order
            ref_path = c.first_path
        else:
            cmp = cert_cmp(cert, c.best_cert, n)
            ref_order = c.best_order
            ref_path = c.best_path
        if cmp == 0:
            if c.nautos < MAXAUTO:
                for i in range(n):
                    c.autos[c.nautos][ref_order[i]] = <signed char>lab[i]
                c.nautos += 1
            k = 0
            while k < depth and c.path[k] == ref_path[k]:
                k += 1
            return k
    if cert_cmp(cert, c.best_cert, n) > 0:
        memcpy(c.best_cert, cert, n * sizeof(uint64_t))
        memcpy(c.best_order, lab, n * sizeof(int))
        memcpy(c.best_path, c.path, depth * sizeof(int))
        c.best_len = depth
    return -1


cdef inline int cert_cmp(uint64_t* a, uint64_t* b, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef int uf_find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void stab_roots(Canon* c, int depth, int* roots) noexcept nogil:
    cdef int n = c.n
    cdef int a, b, v, t, k
    cdef bint fixes
    for v in range(n):
        roots[v] = v
    for t in range(c.nautos):
        fixes = True
        for k in range(depth):
            if c.autos[t][c.path[k]] != c.path[k]:
                fixes = False
                break
        if not fixes:
            continue
        for v in range(n):
            a = uf_find(roots, v)
            b = uf_find(roots, c.autos[t][v])
            if a != b:
                if a < b:
                    roots[b] = a
                else:
                    roots[a] = b
    for v in range(n):
        roots[v] = uf_find(roots, v)


cdef int search(Canon* c, int depth) noexcept nogil:
    cdef int n = c.n
    cdef int* lab = c.lab[depth]
    cdef int* cend = c.cend[depth]
    cdef int i, e, ts, te, best_size, j, v, r, k
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int roots[MAXN]
    cdef int targ[MAXN]
    cdef bint skip
    cdef uint64_t q[MAXQ]
    if c.ncells[depth] == n:
        return leaf(c, depth)
    ts = -1
    te = -1
    best_size = n + 1
    i = 0
    while i < n:
        e = cend[i]
        if e - i > 1 and e - i < best_size:
            best_size = e - i
            ts = i
            te = e
        i = e
    for j in range(ts, te):
        targ[j - ts] = lab[j]
    for j in range(te - ts):
        v = targ[j]
        if ntried > 0:
            stab_roots(c, depth, roots)
            skip = False
            for k in range(ntried):
                if roots[tried[k]] == roots[v]:
                    skip = True
                    break
            if skip:
                continue
        # child partition: v first in the target cell, rest in order
        memcpy(c.lab[depth + 1], lab, n * sizeof(int))
        memcpy(c.cend[depth + 1], cend, n * sizeof(int))
        c.ncells[depth + 1] = c.ncells[depth] + 1
        c.lab[depth + 1][ts] = v
        k = ts + 1
        for i in range(te - ts):
            if targ[i] != v:
                c.lab[depth + 1][k] = targ[i]
                k += 1
        c.cend[depth + 1][ts] = ts + 1
        c.cend[depth + 1][ts + 1] = te
        q[0] = (<uint64_t>1) << v
        refine(c, depth + 1, q, 1)
        c.path[depth] = v
        r = search(c, depth + 1)
        tried[ntried] = v
        ntried += 1
        if r >= 0 and r < depth:
            return r
    return -1


def canonical_labeling(masks, Py_ssize_t n, colors=None):
    """Canonical relabelling; see ``_pykernels.canonical_labeling``."""
    if n > MAXN:
        raise ValueError(f"canonical labelling supports n <= {MAXN}")
    if n == 0:
        return (), []
    cdef Canon* c = <Canon*> PyMem_Malloc(sizeof(Canon))
    if c == NULL:
        raise MemoryError()
    cdef int i, v, start
    cdef uint64_t m
    cdef uint64_t q[MAXQ]
    cdef int qtail = 0
    try:
        c.n = n
        c.have_first = False
        c.nautos = 0
        for v in range(n):
            c.adj[v] = <uint64_t>masks[v]
        if colors is None:
            order = list(range(n))
            bounds = [n]
        else:
            by = {}
            for v in range(n):
                by.setdefault(colors[v], []).append(v)
            order = []
            bounds = []
            for key in sorted(by):
                order.extend(by[key])
                bounds.append(len(order))
        for i in range(n):
            c.lab[0][i] = order[i]
        start = 0
        c.ncells[0] = len(bounds)
        for b in bounds:
            c.cend[0][start] = b
            m = 0
            for i in range(start, b):
                m |= (<uint64_t>1) << c.lab[0][i]
            q[qtail] = m
            qtail += 1
            start = b
        with nogil:
            refine(c, 0, q, qtail)
            search(c, 0)
        cert = tuple([c.best_cert[i] for i in range(n)])
        pos = [0] * n
        for i in range(n):
            pos[c.best_order[i]] = i
        return cert, pos
    finally:
        PyMem_Free(c)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Same contracts as _kernels_py (the reference implementation); this twin
works on machine words and is selected automatically when importable.
"""

from libc.stdint cimport int64_t, uint8_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    """
    #define CTZ64(x) __builtin_ctzll(x)
    #define POP64(x) __builtin_popcountll(x)
    """
    int CTZ64(unsigned long long x) nogil
    int POP64(unsigned long long x) nogil

backend_name = "cython"


cdef inline long _pr(long a, long b) nogil:
    # pair rank, a < b
    return b * (b - 1) // 2 + a


cdef uint64_t* _build_rows(int n, const uint8_t[::1] bits, int nw, bint comp) except NULL:
    cdef long npairs = <long>n * (n - 1) // 2
    cdef uint64_t* rows = <uint64_t*>malloc(npairs * nw * sizeof(uint64_t))
    if rows == NULL:
        raise MemoryError()
    memset(rows, 0, npairs * nw * sizeof(uint64_t))
    cdef long r = 0
    cdef int a, b, c
    for c in range(2, n):
        for b in range(1, c):
            for a in range(b):
                if (bits[r >> 3] >> (r & 7)) & 1:
                    rows[_pr(a, b) * nw + (c >> 6)] |= (<uint64_t>1) << (c & 63)
                    rows[_pr(a, c) * nw + (b >> 6)] |= (<uint64_t>1) << (b & 63)
                    rows[_pr(b, c) * nw + (a >> 6)] |= (<uint64_t>1) << (a & 63)
                r += 1
    if comp:
        _complement_rows(n, rows, nw)
    return rows


cdef void _complement_rows(int n, uint64_t* rows, int nw) nogil:
    cdef long idx = 0
    cdef int u, v, wi
    cdef uint64_t last = ~(<uint64_t>0)
    if n & 63:
        last = ((<uint64_t>1) << (n & 63)) - 1
    for v in range(n):
        for u in range(v):
            for wi in range(nw):
                rows[idx * nw + wi] = ~rows[idx * nw + wi]
            rows[idx * nw + nw - 1] &= last
            rows[idx * nw + (u >> 6)] &= ~((<uint64_t>1) << (u & 63))
            rows[idx * nw + (v >> 6)] &= ~((<uint64_t>1) << (v & 63))
            idx += 1


def find_violation4(int n, const uint8_t[::1] bits, int fmask):
    """First 4-set (lex order) whose induced edge count hits fmask; -1 when
    free, else a | b<<16 | c<<32 | d<<48."""
    if n < 4 or fmask == 0:
        return -1
    cdef int nw = (n + 63) >> 6
    cdef uint64_t* rows = _build_rows(n, bits, nw, False)
    cdef uint64_t* x
    cdef uint64_t* y
    cdef uint64_t* z
    cdef uint64_t xv, yv, zv, viol, lowclear
    cdef int a, b, c, wi, w0, base, d
    cdef int64_t res = -1
    cdef bint done = False
    with nogil:
        for a in range(n - 3):
            if done:
                break
            for b in range(a + 1, n - 2):
                if done:
                    break
                x = rows + _pr(a, b) * nw
                for c in range(b + 1, n - 1):
                    y = rows + _pr(a, c) * nw
                    z = rows + _pr(b, c) * nw
                    base = (x[c >> 6] >> (c & 63)) & 1
                    w0 = (c + 1) >> 6
                    for wi in range(w0, nw):
                        xv = x[wi]
                        yv = y[wi]
                        zv = z[wi]
                        viol = 0
                        if (fmask >> base) & 1:
                            viol |= ~xv & ~yv & ~zv
                        if (fmask >> (base + 1)) & 1:
                            viol |= (xv & ~yv & ~zv) | (~xv & yv & ~zv) | (~xv & ~yv & zv)
                        if (fmask >> (base + 2)) & 1:
                            viol |= (xv & yv & ~zv) | (xv & ~yv & zv) | (~xv & yv & zv)
                        if (fmask >> (base + 3)) & 1:
                            viol |= xv & yv & zv
                        if wi == w0:
                            lowclear = ((<uint64_t>1) << ((c + 1) & 63)) - 1
                            if (c + 1) & 63:
                                viol &= ~lowclear
                        if wi == nw - 1 and (n & 63):
                            viol &= ((<uint64_t>1) << (n & 63)) - 1
                        if viol:
                            d = (wi << 6) + CTZ64(viol)
                            res = (
                                <int64_t>a
                                | (<int64_t>b << 16)
                                | (<int64_t>c << 32)
                                | (<int64_t>d << 48)
                            )
                            done = True
                            break
                    if done:
                        break
    free(rows)
    return res


cdef void _hom_rec(
    int n,
    int nw,
    uint64_t* rows,
    uint64_t* cand_stack,
    int depth,
    int* W,
    int* best_size,
    int* best_arr,
    uint64_t* classes,
    uint64_t* adjbuf,
) nogil:
    cdef uint64_t* cand = cand_stack + depth * nw
    cdef uint64_t* newc = cand_stack + (depth + 1) * nw
    cdef int pc = 0
    cdef int wi, i, u, v, ci, nclasses, placed
    cdef uint64_t word, bit
    for wi in range(nw):
        pc += POP64(cand[wi])
    if pc == 0:
        if depth > best_size[0]:
            best_size[0] = depth
            for i in range(depth):
                best_arr[i] = W[i]
        return
    if depth + pc <= best_size[0]:
        return
    if depth >= 1:
        # greedy partition of candidates into pairwise-incompatible classes
        nclasses = 0
        for wi in range(nw):
            word = cand[wi]
            while word:
                v = (wi << 6) + CTZ64(word)
                word &= word - 1
                for i in range(nw):
                    adjbuf[i] = cand[i]
                for u in range(depth):
                    for i in range(nw):
                        adjbuf[i] &= rows[_pr(min2(W[u], v), max2(W[u], v)) * nw + i]
                placed = 0
                for ci in range(nclasses):
                    placed = 1
                    for i in range(nw):
                        if adjbuf[i] & classes[ci * nw + i]:
                            placed = 0
                            break
                    if placed:
                        classes[ci * nw + (v >> 6)] |= (<uint64_t>1) << (v & 63)
                        break
                if not placed:
                    for i in range(nw):
                        classes[nclasses * nw + i] = 0
                    classes[nclasses * nw + (v >> 6)] |= (<uint64_t>1) << (v & 63)
                    nclasses += 1
        if depth + nclasses <= best_size[0]:
            return
    # destructive ascending iteration over candidates
    while True:
        pc = 0
        for wi in range(nw):
            pc += POP64(cand[wi])
        if pc == 0 or depth + pc <= best_size[0]:
            return
        v = -1
        for wi in range(nw):
            if cand[wi]:
                v = (wi << 6) + CTZ64(cand[wi])
                break
        cand[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        for wi in range(nw):
            newc[wi] = cand[wi]
        for u in range(depth):
            for wi in range(nw):
                newc[wi] &= rows[_pr(min2(W[u], v), max2(W[u], v)) * nw + wi]
        W[depth] = v
        _hom_rec(n, nw, rows, cand_stack, depth + 1, W, best_size, best_arr, classes, adjbuf)


cdef inline int min2(int a, int b) nogil:
    return a if a < b else b


cdef inline int max2(int a, int b) nogil:
    return a if a > b else b


def _hom_search(int n, const uint8_t[::1] bits, bint complement):
    if n < 3:
        return n, tuple(range(n))
    cdef int nw = (n + 63) >> 6
    cdef uint64_t* rows = _build_rows(n, bits, nw, complement)
    cdef uint64_t* cand_stack = <uint64_t*>malloc((n + 2) * nw * sizeof(uint64_t))
    cdef uint64_t* classes = <uint64_t*>malloc(n * nw * sizeof(uint64_t))
    cdef uint64_t* adjbuf = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef int* W = <int*>malloc(n * sizeof(int))
    cdef int* best_arr = <int*>malloc(n * sizeof(int))
    if (
        cand_stack == NULL
        or classes == NULL
        or adjbuf == NULL
        or W == NULL
        or best_arr == NULL
    ):
        free(rows); free(cand_stack); free(classes); free(adjbuf); free(W); free(best_arr)
        raise MemoryError()
    cdef int best_size = 2
    best_arr[0] = 0
    best_arr[1] = 1
    cdef int wi
    for wi in range(nw):
        cand_stack[wi] = ~(<uint64_t>0)
    if n & 63:
        cand_stack[nw - 1] = ((<uint64_t>1) << (n & 63)) - 1
    with nogil:
        _hom_rec(n, nw, rows, cand_stack, 0, W, &best_size, best_arr, classes, adjbuf)
    out = tuple(best_arr[i] for i in range(best_size))
    free(rows); free(cand_stack); free(classes); free(adjbuf); free(W); free(best_arr)
    return best_size, out


def max_clique_bits(int n, const uint8_t[::1] bits):
    return _hom_search(n, bits, False)


def max_coclique_bits(int n, const uint8_t[::1] bits):
    return _hom_search(n, bits, True)


cdef void _canon_rec(
    int n,
    int t,
    uint64_t cur,
    int length,
    int T,
    uint64_t mask,
    int* p,
    uint8_t* used,
    uint64_t* best,
) nogil:
    if t == n:
        if cur < best[0]:
            best[0] = cur
        return
    cdef int blen = t * (t - 1) // 2
    cdef int v, i, j, a, b, c, tmp, rnk, nlen
    cdef uint64_t block, ncur
    for v in range(n):
        if used[v]:
            continue
        block = 0
        for j in range(t):
            for i in range(j):
                a = p[i]
                b = p[j]
                c = v
                if a > b:
                    tmp = a; a = b; b = tmp
                if b > c:
                    tmp = b; b = c; c = tmp
                if a > b:
                    tmp = a; a = b; b = tmp
                rnk = c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a
                if (mask >> rnk) & 1:
                    block |= (<uint64_t>1) << (blen - 1 - (j * (j - 1) // 2 + i))
        ncur = (cur << blen) | block
        nlen = length + blen
        if (best[0] >> (T - nlen)) < ncur:
            continue
        used[v] = 1
        p[t] = v
        _canon_rec(n, t + 1, ncur, nlen, T, mask, p, used, best)
        used[v] = 0


cdef uint64_t _canon_u64(int n, uint64_t mask) nogil:
    cdef int T = n * (n - 1) * (n - 2) // 6
    if T == 0:
        return 0
    cdef int p[8]
    cdef uint8_t used[8]
    cdef uint64_t best
    cdef int i
    for i in range(8):
        used[i] = 0
    if T == 64:
        best = ~(<uint64_t>0)
    else:
        best = ((<uint64_t>1) << T) - 1
    _canon_rec(n, 0, 0, 0, T, mask, p, used, &best)
    return best


def canon_key(int n, mask):
    """Lexicographically minimal flat bit representation over relabelings
    (rank-0 triple is the most significant bit).  Compiled path for
    n <= 8; larger n delegates to the reference implementation."""
    if n > 8:
        from . import _kernels_py

        return _kernels_py.canon_key(n, mask)
    return _canon_u64(n, <uint64_t>mask)


def extend_level(int n_child, parent_mask, int fmask):
    """All one-vertex extensions of a free parent that stay free; see the
    reference implementation for the exact contract."""
    if n_child > 8:
        from . import _kernels_py

        return _kernels_py.extend_level(n_child, parent_mask, fmask)
    cdef uint64_t pm = <uint64_t>parent_mask
    cdef int no = n_child - 1
    cdef int base = no * (no - 1) * (no - 2) // 6
    cdef int np2 = no * (no - 1) // 2
    cdef int ntrip = base
    cdef int pij[56]
    cdef int pik[56]
    cdef int pjk[56]
    cdef uint8_t pbit[56]
    cdef int r = 0
    cdef int a, b, c
    for c in range(2, no):
        for b in range(1, c):
            for a in range(b):
                pij[r] = b * (b - 1) // 2 + a
                pik[r] = c * (c - 1) // 2 + a
                pjk[r] = c * (c - 1) // 2 + b
                pbit[r] = (pm >> r) & 1
                r += 1
    out = []
    cdef uint64_t link, child, key
    cdef int i, cnt
    cdef bint ok
    for link in range(<uint64_t>1 << np2):
        ok = True
        if fmask:
            for i in range(ntrip):
                cnt = (
                    ((link >> pij[i]) & 1)
                    + ((link >> pik[i]) & 1)
                    + ((link >> pjk[i]) & 1)
                    + pbit[i]
                )
                if (fmask >> cnt) & 1:
                    ok = False
                    break
        if ok:
            child = pm | (link << base)
            with nogil:
                key = _canon_u64(n_child, child)
            out.append((key, child))
    return out

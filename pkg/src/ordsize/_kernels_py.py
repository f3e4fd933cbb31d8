"""Pure-Python kernels for the hot inner loops.

The compiled twin in _fastcore.pyx implements the same contracts on machine
words; either backend can serve a process (selection happens in
ordsize.kernels).  Masks are Python integers over colexicographic ranks,
hypergraph bitmaps arrive as little-endian bytes.
"""

backend_name = "python"


def _pair_rows(n, bits):
    # rows[pair_rank(a,b)] = bitmask over w of edges {a,b,w}
    rows = [0] * (n * (n - 1) // 2)
    r = 0
    for c in range(2, n):
        cc = c * (c - 1) // 2
        bit_c = 1 << c
        for b in range(1, c):
            bb = b * (b - 1) // 2
            bit_b = 1 << b
            rc = cc + b  # pair_rank(b, c)
            for a in range(b):
                if (bits[r >> 3] >> (r & 7)) & 1:
                    rows[bb + a] |= bit_c
                    rows[cc + a] |= bit_b
                    rows[rc] |= 1 << a
                r += 1
    return rows


def find_violation4(n, bits, fmask):
    """First 4-set (lex order) whose induced edge count hits fmask.

    Returns -1 when none exists, else a | b<<16 | c<<32 | d<<48.
    """
    if n < 4 or fmask == 0:
        return -1
    rows = _pair_rows(n, bits)
    full = (1 << n) - 1
    want = [(fmask >> t) & 1 for t in range(5)]
    for a in range(n - 3):
        aa = a
        for b in range(a + 1, n - 2):
            x = rows[b * (b - 1) // 2 + aa]
            for c in range(b + 1, n - 1):
                y = rows[c * (c - 1) // 2 + aa]
                z = rows[c * (c - 1) // 2 + b]
                base = (x >> c) & 1
                viol = 0
                if want[base]:
                    viol |= ~x & ~y & ~z
                if want[base + 1]:
                    viol |= (x & ~y & ~z) | (~x & y & ~z) | (~x & ~y & z)
                if want[base + 2]:
                    viol |= (x & y & ~z) | (x & ~y & z) | (~x & y & z)
                if want[base + 3]:
                    viol |= x & y & z
                viol &= full & ~((1 << (c + 1)) - 1)
                if viol:
                    d = (viol & -viol).bit_length() - 1
                    return a | (b << 16) | (c << 32) | (d << 48)
    return -1


def _hom_search(n, rows):
    # Exact maximum set W such that every third vertex demanded by a pair of
    # W lies in rows[pair].  Lexicographically least optimal witness.
    best_size = min(n, 2)
    best = tuple(range(best_size))
    if n < 3:
        return best_size, best
    full = (1 << n) - 1
    W = []

    def rec(cand):
        nonlocal best_size, best
        k = len(W)
        if not cand:
            if k > best_size:
                best_size, best = k, tuple(W)
            return
        if k + cand.bit_count() <= best_size:
            return
        if k >= 1:
            # greedy partition into classes of pairwise incompatible vertices;
            # a valid extension takes at most one vertex per class
            classes = []
            m = cand
            while m:
                vbit = m & -m
                v = vbit.bit_length() - 1
                m ^= vbit
                adj = cand
                for u in W:
                    adj &= rows[_pr(u, v)]
                for i, cl in enumerate(classes):
                    if not (adj & cl):
                        classes[i] = cl | vbit
                        break
                else:
                    classes.append(vbit)
            if k + len(classes) <= best_size:
                return
        m = cand
        while m:
            if k + m.bit_count() <= best_size:
                break  # even taking every remaining candidate cannot improve
            vbit = m & -m
            v = vbit.bit_length() - 1
            m ^= vbit
            newc = m
            for u in W:
                newc &= rows[_pr(u, v)]
            W.append(v)
            rec(newc)
            W.pop()
    rec(full)
    return best_size, best


def _pr(u, v):
    return v * (v - 1) // 2 + u if u < v else u * (u - 1) // 2 + v


def max_clique_bits(n, bits):
    rows = _pair_rows(n, bits)
    return _hom_search(n, rows)


def max_coclique_bits(n, bits):
    full = (1 << n) - 1
    rows = _pair_rows(n, bits)
    comp = [0] * len(rows)
    idx = 0
    for v in range(n):
        for u in range(v):
            comp[idx] = full & ~rows[idx] & ~(1 << u) & ~(1 << v)
            idx += 1
    return _hom_search(n, comp)


def canon_key(n, mask):
    """Lexicographically minimal flat bit representation over all relabelings.

    The key is an integer whose most significant bit is the rank-0 triple.
    Exact for any n in this backend; callers gate it to n <= 8.
    """
    T = n * (n - 1) * (n - 2) // 6
    if T == 0:
        return 0
    best = 1 << T  # sentinel above every real key
    used = [False] * n
    p = [0] * n

    def rec(t, cur, length):
        nonlocal best
        if t == n:
            if cur < best:
                best = cur
            return
        blen = t * (t - 1) // 2
        for v in range(n):
            if used[v]:
                continue
            block = 0
            if blen:
                pv = p
                for j in range(t):
                    pj = pv[j]
                    jj = j * (j - 1) // 2
                    for i in range(j):
                        a, b, c = sorted((pv[i], pj, v))
                        r = c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a
                        if (mask >> r) & 1:
                            block |= 1 << (blen - 1 - (jj + i))
            ncur = (cur << blen) | block
            nlen = length + blen
            if best >> (T - nlen) < ncur:
                continue
            used[v] = True
            p[t] = v
            rec(t + 1, ncur, nlen)
            used[v] = False

    rec(0, 0, 0)
    return best


def extend_level(n_child, parent_mask, fmask):
    """All one-vertex extensions of a free parent that stay free.

    The new vertex is n_child - 1; its link graph ranges over every bitmask
    on the old vertex pairs, in increasing order.  Only 4-sets through the
    new vertex need checking.  Returns [(canonical key, child mask), ...].
    """
    no = n_child - 1
    base = no * (no - 1) * (no - 2) // 6
    np2 = no * (no - 1) // 2
    trip = []
    r = 0
    for c in range(2, no):
        cc = c * (c - 1) // 2
        for b in range(1, c):
            bb = b * (b - 1) // 2
            for a in range(b):
                trip.append((bb + a, cc + a, cc + b, (parent_mask >> r) & 1))
                r += 1
    out = []
    for link in range(1 << np2):
        ok = True
        if fmask:
            for pij, pik, pjk, pb in trip:
                cnt = ((link >> pij) & 1) + ((link >> pik) & 1) + ((link >> pjk) & 1) + pb
                if (fmask >> cnt) & 1:
                    ok = False
                    break
        if ok:
            child = parent_mask | (link << base)
            out.append((canon_key(n_child, child), child))
    return out

"""Triple systems with flat bit-level storage and order-size freeness tests.

Vertices are dense integers 0..n-1.  A 3-uniform hypergraph keeps its edge
set as a bitmap indexed by the colexicographic rank of each triple, so a
membership query is a single bit test and the encoding of a hypergraph on
the first k vertices is a prefix of the encoding on any larger vertex set.
All objects are immutable after construction and safe to share between
concurrent readers; every operation in this module is a pure function.
"""

import hashlib
from dataclasses import dataclass
from itertools import combinations

_POPCOUNT = bytes(bin(i).count("1") for i in range(256))


class InputError(ValueError):
    """An argument violates a documented precondition.

    ``witness`` optionally carries the offending object (for example the
    four-vertex subset that breaks a required freeness condition).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapabilityError(RuntimeError):
    """The request exceeds a documented limit of this implementation."""


def triple_rank(a, b, c):
    """Colexicographic rank of a triple a < b < c among all triples."""
    return c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a


def pair_rank(a, b):
    """Colexicographic rank of a pair a < b."""
    return b * (b - 1) // 2 + a


def triple_count(n):
    return n * (n - 1) * (n - 2) // 6


def pair_count(n):
    return n * (n - 1) // 2


def unrank_triple(r):
    """Inverse of triple_rank."""
    c = 2
    while (c + 1) * c * (c - 1) // 6 <= r:
        c += 1
    r -= c * (c - 1) * (c - 2) // 6
    b = 1
    while (b + 1) * b // 2 <= r:
        b += 1
    a = r - b * (b - 1) // 2
    return a, b, c


def _check_vertex_set(vs, n, what="vertex set"):
    seen = set()
    for v in vs:
        if not isinstance(v, int) or v < 0 or v >= n:
            raise InputError(f"{what} contains out-of-range vertex {v!r} (n={n})")
        if v in seen:
            raise InputError(f"{what} contains duplicate vertex {v}")
        seen.add(v)


class Hypergraph3:
    """Immutable 3-uniform hypergraph on vertices 0..n-1."""

    __slots__ = ("n", "_bits", "_ecount")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        nbits = triple_count(n)
        buf = bytearray((nbits + 7) // 8)
        count = 0
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != 3 or t[0] == t[1] or t[1] == t[2]:
                raise InputError(f"edge {e!r} is not a set of 3 distinct vertices")
            a, b, c = t
            if a < 0 or c >= n:
                raise InputError(f"edge {e!r} out of range for n={n}")
            r = triple_rank(a, b, c)
            byte, off = r >> 3, r & 7
            if not (buf[byte] >> off) & 1:
                buf[byte] |= 1 << off
                count += 1
        self._bits = bytes(buf)
        self._ecount = count

    @classmethod
    def from_mask(cls, n, mask):
        """Build from a flat colexicographic bitmap given as an integer."""
        nbits = triple_count(n)
        if mask < 0 or mask >> nbits:
            raise InputError(f"mask does not fit C({n},3) = {nbits} bits")
        h = cls.__new__(cls)
        h.n = n
        h._bits = mask.to_bytes((nbits + 7) // 8, "little")
        h._ecount = mask.bit_count()
        return h

    @property
    def mask(self):
        """The flat bitmap as an integer (bit r set iff the rank-r triple is an edge)."""
        return int.from_bytes(self._bits, "little")

    @property
    def edge_count(self):
        return self._ecount

    def bits(self):
        """Raw little-endian bitmap bytes (the kernel wire format)."""
        return self._bits

    def has_edge(self, a, b, c):
        if a == b or b == c or a == c:
            raise InputError(f"triple ({a},{b},{c}) has repeated vertices")
        if min(a, b, c) < 0 or max(a, b, c) >= self.n:
            raise InputError(f"triple ({a},{b},{c}) out of range for n={self.n}")
        x, y, z = sorted((a, b, c))
        r = triple_rank(x, y, z)
        return bool((self._bits[r >> 3] >> (r & 7)) & 1)

    def _has(self, a, b, c):
        # trusted path: a < b < c in range
        r = triple_rank(a, b, c)
        return (self._bits[r >> 3] >> (r & 7)) & 1

    def edges(self):
        """Yield edges as ascending triples, in colexicographic order."""
        bits = self._bits
        for byte_i, byte in enumerate(bits):
            if not byte:
                continue
            base = byte_i << 3
            for off in range(8):
                if (byte >> off) & 1:
                    yield unrank_triple(base + off)

    def edge_list(self):
        """All edges as a lexicographically sorted list of triples."""
        return sorted(self.edges())

    def degrees(self):
        deg = [0] * self.n
        for a, b, c in self.edges():
            deg[a] += 1
            deg[b] += 1
            deg[c] += 1
        return deg

    def pair_row(self, u, v):
        """Bitmask over w of the edges {u, v, w}; iteration over a pair's
        incident edges is a single scan of this row."""
        if u == v:
            raise InputError("pair must have distinct vertices")
        if min(u, v) < 0 or max(u, v) >= self.n:
            raise InputError(f"pair ({u},{v}) out of range for n={self.n}")
        a, b = min(u, v), max(u, v)
        row = 0
        for w in range(self.n):
            if w != a and w != b:
                x, y, z = sorted((a, b, w))
                r = triple_rank(x, y, z)
                if (self._bits[r >> 3] >> (r & 7)) & 1:
                    row |= 1 << w
        return row

    def relabel(self, perm):
        """Image under the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("perm is not a permutation of the vertex set")
        return Hypergraph3(self.n, ((perm[a], perm[b], perm[c]) for a, b, c in self.edges()))

    def induced(self, S):
        """Sub-hypergraph induced on S, relabeled densely in sorted order.

        Returns (hypergraph, mapping) where mapping[i] is the original
        vertex carrying new label i.
        """
        vs = sorted(S)
        _check_vertex_set(vs, self.n)
        pos = {v: i for i, v in enumerate(vs)}
        edges = []
        for a, b, c in combinations(vs, 3):
            if self._has(a, b, c):
                edges.append((pos[a], pos[b], pos[c]))
        return Hypergraph3(len(vs), edges), tuple(vs)

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph3)
            and self.n == other.n
            and self._bits == other._bits
        )

    def __hash__(self):
        return hash((self.n, self._bits))

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, edges={self._ecount})"


class Graph2:
    """Immutable simple graph with O(1) adjacency via per-vertex bitmasks."""

    __slots__ = ("n", "rows", "_ecount")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        rows = [0] * n
        count = 0
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise InputError(f"loop edge {e!r}")
            if min(u, v) < 0 or max(u, v) >= n:
                raise InputError(f"edge {e!r} out of range for n={n}")
            if not (rows[u] >> v) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                count += 1
        self.rows = tuple(rows)
        self._ecount = count

    @classmethod
    def from_rows(cls, rows):
        g = cls.__new__(cls)
        g.n = len(rows)
        g.rows = tuple(rows)
        g._ecount = sum(r.bit_count() for r in rows) // 2
        return g

    @property
    def edge_count(self):
        return self._ecount

    def has_edge(self, u, v):
        if u == v or min(u, v) < 0 or max(u, v) >= self.n:
            raise InputError(f"pair ({u},{v}) invalid for n={self.n}")
        return bool((self.rows[u] >> v) & 1)

    def neighbors_mask(self, v):
        return self.rows[v]

    def degree(self, v):
        return self.rows[v].bit_count()

    def edges(self):
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def edge_list(self):
        return list(self.edges())

    def __eq__(self, other):
        return isinstance(other, Graph2) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph2(n={self.n}, edges={self._ecount})"


@dataclass(frozen=True, order=True)
class OrderSizePair:
    """An order m together with a number of induced edges f."""

    m: int
    f: int

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"order must be positive, got {self.m}")
        if self.f < 0:
            raise InputError(f"size must be nonnegative, got {self.f}")


def _binom(n, k):
    if n < k:
        return 0
    from math import comb

    return comb(n, k)


class ForbiddenFamily:
    """A set of order-size pairs at a fixed uniformity r (2 or 3).

    A hypergraph is free of the family when no induced m-vertex subgraph
    spans exactly f edges for any (m, f) in the family.
    """

    __slots__ = ("r", "pairs")

    def __init__(self, r, pairs):
        if r not in (2, 3):
            raise InputError(f"uniformity must be 2 or 3, got {r}")
        norm = set()
        for p in pairs:
            if not isinstance(p, OrderSizePair):
                m, f = p
                p = OrderSizePair(m, f)
            if p.f > _binom(p.m, r):
                raise InputError(f"pair ({p.m},{p.f}) exceeds C({p.m},{r}) at uniformity {r}")
            norm.add(p)
        self.r = r
        self.pairs = frozenset(norm)

    @classmethod
    def parse(cls, text, r=3):
        """Parse a comma-separated list of m:f tokens, e.g. '4:2,4:4'."""
        pairs = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            try:
                m, f = tok.split(":")
                pairs.append((int(m), int(f)))
            except ValueError:
                raise InputError(f"bad order-size token {tok!r}, expected m:f") from None
        return cls(r, pairs)

    def orders(self):
        """Sorted distinct orders m appearing in the family."""
        return sorted({p.m for p in self.pairs})

    def size_mask(self, m):
        """Bitmask over f of the forbidden sizes at order m."""
        mask = 0
        for p in self.pairs:
            if p.m == m:
                mask |= 1 << p.f
        return mask

    def sorted_pairs(self):
        return sorted((p.m, p.f) for p in self.pairs)

    def token(self):
        return ",".join(f"{m}:{f}" for m, f in self.sorted_pairs())

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        return (
            isinstance(other, ForbiddenFamily)
            and self.r == other.r
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash((self.r, self.pairs))

    def __repr__(self):
        return f"ForbiddenFamily(r={self.r}, {{{self.token()}}})"


def induced_edge_count(H, S):
    """Number of edges of H spanned by the vertex set S."""
    vs = sorted(S)
    _check_vertex_set(vs, H.n)
    count = 0
    for a, b, c in combinations(vs, 3):
        count += H._has(a, b, c)
    return count


def find_q_violation(H, family):
    """First vertex subset (in lexicographic order, smallest order first)
    whose induced edge count is forbidden by the family; None if H is free.
    """
    if family.r != 3:
        raise InputError(f"family has uniformity {family.r}, expected 3")
    n = H.n
    for m in family.orders():
        fmask = family.size_mask(m)
        if m > n:
            continue
        if m == 4:
            from . import kernels

            packed = kernels.find_violation4(n, H._bits, fmask)
            if packed >= 0:
                return tuple((packed >> (16 * i)) & 0xFFFF for i in range(4))
            continue
        for S in combinations(range(n), m):
            cnt = 0
            for a, b, c in combinations(S, 3):
                cnt += H._has(a, b, c)
            if (fmask >> cnt) & 1:
                return S
    return None


def is_q_free(H, family):
    """True iff no induced subgraph of H realizes a forbidden order-size pair."""
    return find_q_violation(H, family) is None


def find_q_violation_graph(G, family):
    """Graph analogue of find_q_violation (uniformity 2)."""
    if family.r != 2:
        raise InputError(f"family has uniformity {family.r}, expected 2")
    n = G.n
    for m in family.orders():
        fmask = family.size_mask(m)
        if m > n:
            continue
        for S in combinations(range(n), m):
            cnt = 0
            for i in range(1, m):
                cnt += (G.rows[S[i]] & _subset_mask(S[:i])).bit_count()
            if (fmask >> cnt) & 1:
                return S
    return None


def _subset_mask(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def is_q_free_graph(G, family):
    return find_q_violation_graph(G, family) is None


def complement(H):
    """The 3-graph whose edges are exactly the non-edges of H."""
    nbits = triple_count(H.n)
    full = (1 << nbits) - 1
    return Hypergraph3.from_mask(H.n, H.mask ^ full)


def complement_family(family):
    """Map each (m, f) to (m, C(m, r) - f); freeness transfers to complements."""
    return ForbiddenFamily(
        family.r, ((p.m, _binom(p.m, family.r) - p.f) for p in family.pairs)
    )


def link_graph(H, v, within=None):
    """Link of v: the graph with {x, y} an edge iff {v, x, y} is a hyperedge.

    Restricted to ``within`` when given.  Vertices are remapped densely in
    sorted order; returns (graph, mapping) with mapping[i] the original
    vertex behind new label i.
    """
    if v < 0 or v >= H.n:
        raise InputError(f"vertex {v} out of range for n={H.n}")
    if within is None:
        verts = [u for u in range(H.n) if u != v]
    else:
        verts = sorted(within)
        _check_vertex_set(verts, H.n)
        if v in verts:
            raise InputError(f"restriction set must not contain the apex vertex {v}")
    pos = {u: i for i, u in enumerate(verts)}
    edges = []
    for x, y in combinations(verts, 2):
        a, b, c = sorted((v, x, y))
        if H._has(a, b, c):
            edges.append((pos[x], pos[y]))
    return Graph2(len(verts), edges), tuple(verts)


CANONICAL_EXACT_LIMIT = 8


def canonical_key(H, mode="exact"):
    """A relabeling-invariant key for H.

    In "exact" mode (n <= 8) the key is the lexicographically minimal flat
    bit representation over all vertex permutations: equal keys hold exactly
    for isomorphic hypergraphs.  In "hash" mode the key is a degree and
    codegree refinement certificate usable at any n; equal keys are only
    necessary, never sufficient, for isomorphism.
    """
    if mode == "exact":
        if H.n > CANONICAL_EXACT_LIMIT:
            raise CapabilityError(
                f"exact canonical form is limited to n <= {CANONICAL_EXACT_LIMIT}, got n={H.n}"
            )
        from . import kernels

        return kernels.canon_key(H.n, H.mask)
    if mode == "hash":
        return _refinement_certificate(H)
    raise InputError(f"unknown canonical mode {mode!r}")


def _refinement_certificate(H, rounds=3):
    # Iterated color refinement: start from degrees, refine each vertex by the
    # multiset of color pairs it sees across its edges, then hash the palette.
    colors = H.degrees()
    edges = list(H.edges())
    for _ in range(rounds):
        seen = [[] for _ in range(H.n)]
        for a, b, c in edges:
            ca, cb, cc = colors[a], colors[b], colors[c]
            seen[a].append((cb, cc) if cb <= cc else (cc, cb))
            seen[b].append((ca, cc) if ca <= cc else (cc, ca))
            seen[c].append((ca, cb) if ca <= cb else (cb, ca))
        palette = {}
        new = [0] * H.n
        for v in range(H.n):
            sig = (colors[v], tuple(sorted(seen[v])))
            new[v] = palette.setdefault(sig, len(palette))
        colors = new
    blob = repr((H.n, H.edge_count, sorted(colors))).encode()
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")

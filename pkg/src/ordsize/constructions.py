"""Seeded, deterministic generators for the extremal families and the
random models used in the experiments.

Every randomized generator takes an explicit 64-bit integer seed driving a
Mersenne Twister stream (random.Random); identical seed and parameters give
bit-identical output on every platform.  Vertex layouts are fixed and
documented per generator so outputs are canonical, not merely isomorphic.
"""

from itertools import combinations, product
from math import log
from random import Random

from .core import (
    CapabilityError,
    Graph2,
    Hypergraph3,
    InputError,
    triple_count,
)
from .solver import SetSystem

# The 6-vertex, 10-edge base system whose blow-ups avoid induced edge
# counts 1, 3 and 4 on every four vertices (0-based labels).
_BASE6_EDGES = (
    (0, 1, 2),
    (0, 1, 3),
    (2, 3, 4),
    (2, 3, 5),
    (4, 5, 0),
    (4, 5, 1),
    (0, 2, 4),
    (0, 3, 5),
    (1, 2, 5),
    (1, 3, 4),
)


def gen_base6():
    """The 6-vertex base of the blow-up family: 10 edges, every vertex in
    exactly 5 of them, independence and clique number both 3."""
    return Hypergraph3(6, _BASE6_EDGES)


def gen_star(n):
    """Star with apex 0 over leaves 1..n-1: all triples {0, x, y}."""
    if n < 3:
        raise InputError(f"a star needs at least 3 vertices, got {n}")
    return Hypergraph3(n, ((0, x, y) for x, y in combinations(range(1, n), 2)))


class BlowupSpec:
    """Replace vertex i of ``base`` by an independent set of parts[i] fresh
    vertices; a transversal triple is an edge iff its base triple is."""

    __slots__ = ("base", "parts")

    def __init__(self, parts, base=None):
        self.base = base if base is not None else gen_base6()
        self.parts = tuple(parts)
        if len(self.parts) != self.base.n:
            raise InputError(
                f"need one part per base vertex: {self.base.n} expected, got {len(self.parts)}"
            )
        if any(p < 1 for p in self.parts):
            raise InputError("part sizes must be positive")


def _blowup_edges(base, parts):
    # allows zero part sizes (used by recognition); blocks are consecutive
    # vertex ranges in base-vertex order
    offs = [0]
    for p in parts:
        offs.append(offs[-1] + p)
    for i, j, k in base.edges():
        for e in product(
            range(offs[i], offs[i + 1]),
            range(offs[j], offs[j + 1]),
            range(offs[k], offs[k + 1]),
        ):
            yield e


def gen_blowup(spec):
    """Blow-up of spec.base with the given part sizes."""
    n = sum(spec.parts)
    return Hypergraph3(n, _blowup_edges(spec.base, spec.parts))


def gen_ngon(n):
    """Points of a regular n-gon (odd n only); a triple is an edge iff all
    three arcs between consecutive chosen points are shorter than half the
    circle, i.e. the triangle contains the center.

    Even n is refused: a triangle can then have the center on a chord and
    no convention is adopted for that degenerate case.
    """
    if n % 2 == 0:
        raise CapabilityError(f"the polygon construction is defined for odd n only, got {n}")
    if n < 5:
        raise InputError(f"need n >= 5, got {n}")
    edges = []
    for a, b, c in combinations(range(n), 3):
        if 2 * (b - a) < n and 2 * (c - b) < n and 2 * (n - c + a) < n:
            edges.append((a, b, c))
    return Hypergraph3(n, edges)


def odd_triple_mask(G):
    """Flat triple bitmap of the triples spanning an odd number of edges
    of G, assembled blockwise with word-parallel parity arithmetic."""
    n = G.n
    rows = G.rows
    mask = 0
    for c in range(n):
        block = 0
        rc = rows[c]
        for b in range(1, c):
            low = (1 << b) - 1
            chunk = (rows[b] ^ rc) & low
            if (rc >> b) & 1:
                chunk ^= low
            block |= chunk << (b * (b - 1) // 2)
        mask |= block << triple_count(c)
    return mask


def gen_two_graph(G):
    """The triple system whose edges span an odd number of edges of G; its
    four-vertex induced counts are always even."""
    return Hypergraph3.from_mask(G.n, odd_triple_mask(G))


def gen_gnp(n, p, seed):
    """Binomial random graph: each pair independently an edge with
    probability p, pairs visited in ascending (u, v) order."""
    if not 0 <= p <= 1:
        raise InputError(f"probability must lie in [0,1], got {p}")
    rng = Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph2.from_rows(rows)


def is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class BipartiteGraph:
    """Bipartite graph with sides X (0..nx-1) and Y (0..ny-1) and bitmask
    adjacency in both directions."""

    __slots__ = ("nx", "ny", "x_rows", "y_rows", "_ecount")

    def __init__(self, nx, ny, edges=()):
        self.nx = nx
        self.ny = ny
        x_rows = [0] * nx
        y_rows = [0] * ny
        count = 0
        for x, y in edges:
            if not (0 <= x < nx and 0 <= y < ny):
                raise InputError(f"edge ({x},{y}) out of range")
            if not (y_rows[y] >> x) & 1:
                x_rows[x] |= 1 << y
                y_rows[y] |= 1 << x
                count += 1
        self.x_rows = tuple(x_rows)
        self.y_rows = tuple(y_rows)
        self._ecount = count

    @property
    def edge_count(self):
        return self._ecount

    def has_edge(self, x, y):
        return bool((self.x_rows[x] >> y) & 1)

    def degree_y(self, y):
        return self.y_rows[y].bit_count()

    def is_c4_free(self):
        """No two Y-vertices share two common X-neighbours (and dually)."""
        for j in range(self.ny):
            rj = self.y_rows[j]
            for i in range(j):
                if (self.y_rows[i] & rj).bit_count() >= 2:
                    return False
        return True

    def __repr__(self):
        return f"BipartiteGraph(nx={self.nx}, ny={self.ny}, edges={self._ecount})"


def gen_projective_plane(q):
    """Projective plane of prime order q over homogeneous coordinates.

    Returns (system, incidence): the set system of lines over the
    q^2 + q + 1 points, and the point-line incidence graph, which is
    C4-free with every pair of points on exactly one common line.
    """
    if not is_prime(q):
        raise InputError(f"plane order must be prime, got {q}")
    # canonical representatives of 1-dim subspaces of F_q^3
    reps = [(1, a, b) for a in range(q) for b in range(q)]
    reps += [(0, 1, a) for a in range(q)]
    reps.append((0, 0, 1))
    n = len(reps)
    blocks = []
    edges = []
    for li, (u, v, w) in enumerate(reps):
        pts = [
            pi
            for pi, (x, y, z) in enumerate(reps)
            if (u * x + v * y + w * z) % q == 0
        ]
        blocks.append(tuple(pts))
        edges.extend((p, li) for p in pts)
    return SetSystem(n, blocks), BipartiteGraph(n, n, edges)


def gen_plane_stars(q):
    """A star on every line of the prime-order plane, centered at the
    line's smallest point; tight components are exactly those stars."""
    system, _ = gen_projective_plane(q)
    edges = []
    for line in system.blocks:
        center = line[0]
        for x, y in combinations(line[1:], 2):
            edges.append((center, x, y))
    return Hypergraph3(q * q + q + 1, edges)


def gen_partial_steiner(n, seed, target=None):
    """Greedy randomized triple packing: visit all triples in a seeded
    random order and keep each one covering three fresh pairs.  The result
    is linear and maximal (unless ``target`` stops it early)."""
    if n < 3:
        raise InputError(f"need at least 3 vertices, got {n}")
    rng = Random(seed)
    triples = list(combinations(range(n), 3))
    rng.shuffle(triples)
    covered = set()
    blocks = []
    for a, b, c in triples:
        if (a, b) in covered or (a, c) in covered or (b, c) in covered:
            continue
        covered.update(((a, b), (a, c), (b, c)))
        blocks.append((a, b, c))
        if target is not None and len(blocks) >= target:
            break
    return SetSystem(n, sorted(blocks))


def _near_equal_sizes(m, r):
    # ceil(m/r) repeated (m mod r) times, then floor(m/r); larger parts first
    q, rem = divmod(m, r)
    return [q + 1] * rem + [q] * (r - rem)


def gen_three_clique_cyclic(n):
    """Partition into three near-equal cliques A1, A2, A3 (consecutive
    ranges, larger first) plus every triple with one vertex in Ai and two
    in A(i+1), indices cyclic."""
    if n < 3:
        raise InputError(f"need at least 3 vertices, got {n}")
    sizes = _near_equal_sizes(n, 3)
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    parts = [range(bounds[i], bounds[i + 1]) for i in range(3)]
    edges = []
    for part in parts:
        edges.extend(combinations(part, 3))
    for i in range(3):
        nxt = parts[(i + 1) % 3]
        for a in parts[i]:
            for b, c in combinations(nxt, 2):
                edges.append((a, b, c))
    return Hypergraph3(n, edges)


def gen_clique_plus_isolated(n):
    """Complete triple system on 0..n-2 with vertex n-1 isolated."""
    if n < 4:
        raise InputError(f"need at least 4 vertices, got {n}")
    return Hypergraph3(n, combinations(range(n - 1), 3))


def gen_subsample_construction(q, c_p=1.0, seed=0):
    """Random point subsample of the prime-order plane.

    Keeps each point independently with probability
    p = min(1, c_p * N^(-1/4) * ln(N)^2) where N = q^2 + q + 1, restricts
    the incidence graph to the kept points, turns the traces of the lines
    (of size >= 2) into the blocks of a linear set system, and fills every
    block into a clique of a triple system.

    Returns (bipartite, system, hypergraph).
    """
    if c_p <= 0:
        raise InputError(f"probability scale must be positive, got {c_p}")
    _, incidence = gen_projective_plane(q)
    npts = q * q + q + 1
    p = min(1.0, c_p * npts ** -0.25 * log(npts) ** 2)
    rng = Random(seed)
    kept = [x for x in range(npts) if rng.random() < p]
    pos = {x: i for i, x in enumerate(kept)}
    edges = []
    blocks = []
    for y in range(incidence.ny):
        m = incidence.y_rows[y]
        trace = []
        while m:
            bit = m & -m
            x = bit.bit_length() - 1
            m ^= bit
            if x in pos:
                trace.append(pos[x])
        edges.extend((x, y) for x in trace)
        if len(trace) >= 2:
            blocks.append(tuple(trace))
    sub = BipartiteGraph(len(kept), incidence.ny, edges)
    system = SetSystem(len(kept), blocks)
    from .solver import clique_fill

    return sub, system, clique_fill(system)


def iterated_partition_count(r, m):
    """Edge count of the iterated-partition construction, computed by the
    recursion product(part sizes) + sum over parts, without building it."""
    if m < r:
        return 0
    total = 1
    for s in _near_equal_sizes(m, r):
        total *= s
    return total + sum(iterated_partition_count(r, s) for s in _near_equal_sizes(m, r))


def gen_iterated_partition(r, m):
    """Partition m vertices into r near-equal parts, take all transversal
    r-sets, and recurse inside each part.

    Returns (hypergraph, count) at r = 3 and ((n, edges, r), count) for
    r >= 4, where edges is a sorted list of r-tuples.
    """
    if r < 3:
        raise InputError(f"uniformity must be at least 3, got {r}")
    if m < r:
        raise InputError(f"need at least r = {r} vertices, got {m}")
    edges = []

    def build(lo, hi):
        if hi - lo < r:
            return
        bounds = [lo]
        for s in _near_equal_sizes(hi - lo, r):
            bounds.append(bounds[-1] + s)
        ranges = [range(bounds[i], bounds[i + 1]) for i in range(r)]
        edges.extend(product(*ranges))
        for rg in ranges:
            build(rg.start, rg.stop)

    build(0, m)
    edges.sort()
    if r == 3:
        return Hypergraph3(m, edges), len(edges)
    return (m, edges, r), len(edges)


def gen_random(n, p, seed):
    """Binomial random triple system: each triple independently an edge
    with probability p, visited in increasing colexicographic rank."""
    if not 0 <= p <= 1:
        raise InputError(f"probability must lie in [0,1], got {p}")
    rng = Random(seed)
    edges = []
    for c in range(2, n):
        for b in range(1, c):
            for a in range(b):
                if rng.random() < p:
                    edges.append((a, b, c))
    return Hypergraph3(n, edges)


def gen_star_forest(n, seed, overlap_p=0.3):
    """Random collection of stars whose supports pairwise share at most one
    vertex; with probability ``overlap_p`` a star hooks onto one existing
    vertex.  Every tight component of the output is a star."""
    if n < 3:
        raise InputError(f"need at least 3 vertices, got {n}")
    rng = Random(seed)
    fresh = list(range(n))
    rng.shuffle(fresh)
    used = []
    edges = []
    while len(fresh) >= 3:
        size = rng.randrange(3, 7)
        support = []
        if used and rng.random() < overlap_p:
            support.append(used[rng.randrange(len(used))])
            size -= 1
        take = min(size, len(fresh))
        if take + len(support) < 3:
            break
        support.extend(fresh[:take])
        del fresh[:take]
        center = support[0]
        leaves = support[1:]
        for x, y in combinations(leaves, 2):
            edges.append((center, x, y))
        used.extend(v for v in support if v not in used)
    return Hypergraph3(n, edges)


def gen_random_linear_system(n, seed, max_block=6, attempts=None):
    """Random maximal-ish linear system with block sizes in 3..max_block,
    built by rejecting blocks that would cover a pair twice."""
    if n < 3:
        raise InputError(f"need at least 3 vertices, got {n}")
    rng = Random(seed)
    if attempts is None:
        attempts = 8 * n
    covered = set()
    blocks = []
    for _ in range(attempts):
        k = rng.randrange(3, min(max_block, n) + 1)
        cand = sorted(rng.sample(range(n), k))
        pairs = list(combinations(cand, 2))
        if any(p in covered for p in pairs):
            continue
        covered.update(pairs)
        blocks.append(tuple(cand))
    return SetSystem(n, sorted(blocks))

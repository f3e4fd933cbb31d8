"""Exact solvers: maximum cliques and cocliques of triple systems, the
two-intersection functionals on set systems, and the exhaustive
isomorph-pruned minimum of the homogeneous number over all free
hypergraphs of a given order.

All solvers are exact and deterministic; ties are broken so that reported
witnesses are reproducible (maximum clique and coclique witnesses are the
lexicographically least optimal sets).
"""

import time
from dataclasses import dataclass, field

from . import fileio, kernels
from .core import (
    CANONICAL_EXACT_LIMIT,
    CapabilityError,
    ForbiddenFamily,
    Hypergraph3,
    InputError,
    find_q_violation,
    pair_rank,
)


@dataclass(frozen=True)
class HomogeneousResult:
    """Largest clique and coclique of one hypergraph."""

    omega: int
    alpha: int
    h: int
    clique_witness: tuple
    coclique_witness: tuple

    def to_json_dict(self):
        return {
            "omega": self.omega,
            "alpha": self.alpha,
            "h": self.h,
            "clique_witness": list(self.clique_witness),
            "coclique_witness": list(self.coclique_witness),
        }


def max_clique(H):
    """Size and lexicographically least witness of a largest clique."""
    return kernels.max_clique_bits(H.n, H.bits())


def max_coclique(H):
    """Size and lexicographically least witness of a largest independent set."""
    return kernels.max_coclique_bits(H.n, H.bits())


def homogeneous(H):
    w, cw = max_clique(H)
    a, aw = max_coclique(H)
    return HomogeneousResult(w, a, max(w, a), cw, aw)


class SetSystem:
    """A non-uniform hypergraph given as a list of blocks (vertex sets).

    ``linear`` records whether every pair of vertices lies in at most one
    block; the flag is verified at construction time.
    """

    __slots__ = ("n", "blocks", "linear")

    def __init__(self, n, blocks):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        norm = []
        covered = set()
        linear = True
        for b in blocks:
            t = tuple(sorted(b))
            if len(t) < 2 or len(set(t)) != len(t):
                raise InputError(f"block {b!r} must have at least 2 distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise InputError(f"block {b!r} out of range for n={n}")
            for i in range(len(t)):
                for j in range(i + 1, len(t)):
                    p = (t[i], t[j])
                    if p in covered:
                        linear = False
                    covered.add(p)
            norm.append(t)
        self.blocks = tuple(norm)
        self.linear = linear

    def max_block_size(self):
        return max((len(b) for b in self.blocks), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, SetSystem)
            and self.n == other.n
            and sorted(self.blocks) == sorted(other.blocks)
        )

    def __repr__(self):
        return f"SetSystem(n={self.n}, blocks={len(self.blocks)})"


def alpha2(SS):
    """Largest set meeting every block in at most 2 vertices.

    Blocks of size <= 2 never constrain and are ignored.  Exact branch and
    bound; deterministic (greedy warm start plus ascending-vertex search).
    """
    n = SS.n
    cons = []
    for b in SS.blocks:
        if len(b) >= 3:
            m = 0
            for v in b:
                m |= 1 << v
            cons.append(m)
    if not cons:
        return n, tuple(range(n))
    nb = len(cons)
    through = [[] for _ in range(n)]
    cover = [0] * n
    for i, bm in enumerate(cons):
        m = bm
        while m:
            vbit = m & -m
            v = vbit.bit_length() - 1
            m ^= vbit
            through[v].append(i)
            cover[v] |= bm
    counts = [0] * nb

    # deterministic warm start: ascending greedy
    greedy = []
    for v in range(n):
        if all(counts[i] < 2 for i in through[v]):
            greedy.append(v)
            for i in through[v]:
                counts[i] += 1
    best_size, best = len(greedy), tuple(greedy)
    for i in range(nb):
        counts[i] = 0

    chosen = []
    full = (1 << n) - 1

    def rec(alive):
        nonlocal best_size, best
        k = len(chosen)
        if not alive:
            if k > best_size:
                best_size, best = k, tuple(chosen)
            return
        if k + alive.bit_count() <= best_size:
            return
        # pencil bound: candidates on blocks through a chosen vertex are
        # capped by the remaining allowance of those blocks
        for u in chosen:
            t = k + (alive & ~cover[u]).bit_count()
            for i in through[u]:
                allow = 2 - counts[i]
                if allow > 0:
                    c = (alive & cons[i]).bit_count()
                    t += c if c < allow else allow
            if t <= best_size:
                return
        vbit = alive & -alive
        v = vbit.bit_length() - 1
        rest = alive ^ vbit
        # include v
        blocked = 0
        for i in through[v]:
            counts[i] += 1
            if counts[i] == 2:
                blocked |= cons[i]
        chosen.append(v)
        rec(rest & ~blocked)
        chosen.pop()
        for i in through[v]:
            counts[i] -= 1
        # exclude v
        rec(rest)

    rec(full)
    return best_size, best


def g_value(SS):
    """max(largest block size, alpha2); defined for linear systems."""
    if not SS.linear:
        raise InputError("set system is not linear")
    size, _ = alpha2(SS)
    return max(SS.max_block_size(), size)


def clique_fill(SS):
    """The triple system whose edges are all triples inside some block."""
    if not SS.linear:
        raise InputError("set system is not linear")
    from itertools import combinations

    edges = []
    for b in SS.blocks:
        if len(b) >= 3:
            edges.extend(combinations(b, 3))
    return Hypergraph3(SS.n, edges)


def maximal_clique_system(H, require_free=False):
    """The set system of all maximal cliques of size >= 3.

    Maximal cliques of size 2 are pairs lying in no edge; they never affect
    linearity or the two-intersection number and are omitted.  When
    ``require_free`` is set, H must avoid induced counts 2 and 3 on four
    vertices (which guarantees a linear result) or an InputError carrying
    the violating 4-set is raised.
    """
    if require_free:
        w = find_q_violation(H, ForbiddenFamily(3, [(4, 2), (4, 3)]))
        if w is not None:
            raise InputError(f"hypergraph is not {{(4,2),(4,3)}}-free: {w}", witness=w)
    n = H.n
    full = (1 << n) - 1
    rows = {}
    for v in range(n):
        for u in range(v):
            rows[pair_rank(u, v)] = H.pair_row(u, v)
    blocks = []

    def extend(R, P, X):
        if P == 0 and X == 0:
            if len(R) >= 3:
                blocks.append(tuple(R))
            return
        m = P
        while m:
            vbit = m & -m
            v = vbit.bit_length() - 1
            m ^= vbit
            if R:
                fil = full
                for w in R:
                    fil &= rows[pair_rank(min(v, w), max(v, w))]
            else:
                fil = full & ~vbit
            extend(R + [v], P & fil, X & fil)
            P &= ~vbit
            X |= vbit

    extend([], full, 0)
    return SetSystem(n, sorted(blocks))


def max_codegree(H):
    """Pair of maximum codegree, with its common neighborhood.

    Returns ((u, v), d, neighborhood); the lexicographically least pair
    attaining the maximum.  For n < 2 returns (None, 0, ()).
    """
    if H.n < 2:
        return None, 0, ()
    best_pair, best_d, best_row = (0, 1), -1, 0
    for v in range(H.n):
        for u in range(v):
            row = H.pair_row(u, v)
            d = row.bit_count()
            if d > best_d:
                best_pair, best_d, best_row = (u, v), d, row
    hood = []
    m = best_row
    while m:
        b = m & -m
        hood.append(b.bit_length() - 1)
        m ^= b
    return best_pair, best_d, tuple(hood)


@dataclass
class Budget:
    """Resource caps for exhaustive enumeration."""

    max_classes: int | None = None
    max_seconds: float | None = None


@dataclass
class ExtremalRecord:
    """Exact minimum homogeneous number over all n-vertex free hypergraphs.

    ``value`` is None either when no free hypergraph on n vertices exists
    (with ``complete`` True: a Ramsey obstruction, reported as the infinite
    value) or when the budget expired before any full-order class was seen.
    When ``complete`` is False a non-None value is only an upper bound.
    """

    n: int
    family: ForbiddenFamily | None
    value: int | None
    witness: Hypergraph3 | None
    explored: int
    complete: bool

    def to_json_dict(self):
        return {
            "n": self.n,
            "q": [list(p) for p in self.family.sorted_pairs()] if self.family else [],
            "value": self.value,
            "witness": fileio.serialize_hypergraph(self.witness) if self.witness else None,
            "explored": self.explored,
            "complete": self.complete,
        }


def _family_fmask(family):
    if family is None:
        return 0
    if family.r != 3:
        raise InputError(f"family has uniformity {family.r}, expected 3")
    orders = family.orders()
    if orders and orders != [4]:
        raise CapabilityError(
            f"exhaustive enumeration supports order-4 families only, got orders {orders}"
        )
    return family.size_mask(4)


def qfree_classes(n, family=None, budget=None):
    """Representatives of every isomorphism class of free hypergraph on n
    vertices, built by extending smaller free representatives one vertex at
    a time and rejecting isomorphs through exact canonical keys.

    Returns (representatives, explored, complete) where ``explored`` counts
    the isomorphism classes visited across all orders 0..n.
    """
    if n > CANONICAL_EXACT_LIMIT:
        raise CapabilityError(
            f"enumeration needs exact canonical forms, limited to n <= {CANONICAL_EXACT_LIMIT}"
        )
    fmask = _family_fmask(family)
    deadline = None
    max_classes = None
    if budget is not None:
        if budget.max_seconds is not None:
            deadline = time.monotonic() + budget.max_seconds
        max_classes = budget.max_classes
    level = [0]  # masks of the representatives at the current order
    explored = 1
    complete = True
    order_reached = 0
    for k in range(1, n + 1):
        seen = {}
        interrupted = False
        for pm in level:
            if deadline is not None and time.monotonic() > deadline:
                interrupted = True
                break
            if max_classes is not None and explored + len(seen) > max_classes:
                interrupted = True
                break
            for key, child in kernels.extend_level(k, pm, fmask):
                if key not in seen:
                    seen[key] = child
        level = list(seen.values())
        explored += len(level)
        order_reached = k
        if interrupted:
            complete = False
            break
        if not level:
            break  # no free hypergraph at this order, nor at any larger one
    if complete or order_reached == n:
        # on an interrupted final level the survivors still give upper bounds
        reps = [Hypergraph3.from_mask(n, m) for m in level]
    else:
        reps = []
    return reps, explored, complete


def exact_min_homogeneous(n, family, budget=None):
    """Exact minimum of the homogeneous number over all n-vertex free
    hypergraphs, with a witness attaining it."""
    reps, explored, complete = qfree_classes(n, family, budget)
    best_val, best_wit = None, None
    for H in reps:
        r = homogeneous(H)
        if best_val is None or r.h < best_val:
            best_val, best_wit = r.h, H
    return ExtremalRecord(
        n=n,
        family=family,
        value=best_val,
        witness=best_wit,
        explored=explored,
        complete=complete,
    )

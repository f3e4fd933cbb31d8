"""Structural predicates: tight-component decomposition, star recognition,
four-vertex parity, induced-C4 links, and recognition of the blow-up and
polygon families.
"""

from dataclasses import dataclass
from itertools import combinations, permutations

from .core import (
    ForbiddenFamily,
    InputError,
    find_q_violation,
    link_graph,
)
from .constructions import _blowup_edges, gen_base6, gen_ngon
from .core import Hypergraph3

FAMILY_2_4 = ForbiddenFamily(3, [(4, 2), (4, 4)])
FAMILY_1_3 = ForbiddenFamily(3, [(4, 1), (4, 3)])
FAMILY_1_3_4 = ForbiddenFamily(3, [(4, 1), (4, 3), (4, 4)])


@dataclass(frozen=True)
class TightComponent:
    """A maximal set of edges pairwise joined by walks of edges that
    consecutively share two vertices."""

    edges: tuple
    support: tuple
    is_star: bool
    center: int | None

    def to_json_dict(self):
        return {
            "edges": [list(e) for e in self.edges],
            "support": list(self.support),
            "is_star": self.is_star,
            "center": self.center,
        }


def _component_star(edges):
    # candidate centers come from the shared pair of any two tightly
    # adjacent edges; a single-edge component is a star with its smallest
    # vertex reported as center
    if len(edges) == 1:
        return True, edges[0][0]
    e0 = set(edges[0])
    candidates = None
    for f in edges[1:]:
        shared = e0.intersection(f)
        if len(shared) == 2:
            candidates = sorted(shared)
            break
    if candidates is None:
        return False, None
    support = set()
    for e in edges:
        support.update(e)
    for c in candidates:
        if all(c in e for e in edges):
            k = len(support) - 1
            if len(edges) == k * (k - 1) // 2:
                return True, c
    return False, None


def tight_components(H):
    """Partition of the edge set into tight components, each tested for
    star shape.  Components are ordered by their lexicographically least
    edge."""
    edges = H.edge_list()
    ne = len(edges)
    parent = list(range(ne))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    last = {}
    for i, (a, b, c) in enumerate(edges):
        for p in ((a, b), (a, c), (b, c)):
            if p in last:
                union(i, last[p])
            last[p] = i
    groups = {}
    for i in range(ne):
        groups.setdefault(find(i), []).append(i)
    out = []
    for root in sorted(groups):
        comp_edges = tuple(edges[i] for i in groups[root])
        support = sorted({v for e in comp_edges for v in e})
        is_star, center = _component_star(comp_edges)
        out.append(TightComponent(comp_edges, tuple(support), is_star, center))
    return out


@dataclass(frozen=True)
class CharacterizationReport:
    """Both sides of the star characterization, computed independently."""

    q_free_bruteforce: bool
    all_components_stars: bool
    components: tuple
    pairwise_support_overlap_ok: bool

    def to_json_dict(self):
        return {
            "q_free_bruteforce": self.q_free_bruteforce,
            "all_components_stars": self.all_components_stars,
            "pairwise_support_overlap_ok": self.pairwise_support_overlap_ok,
            "components": [c.to_json_dict() for c in self.components],
        }


def star_characterization_report(H):
    """Brute-force freeness from counts {2, 4} on four vertices versus the
    every-tight-component-is-a-star predicate, plus the pairwise support
    overlap condition.  The two sides are computed independently."""
    free = find_q_violation(H, FAMILY_2_4) is None
    comps = tight_components(H)
    all_stars = all(c.is_star for c in comps)
    masks = []
    for c in comps:
        m = 0
        for v in c.support:
            m |= 1 << v
        masks.append(m)
    overlap_ok = True
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (masks[i] & masks[j]).bit_count() > 1:
                overlap_ok = False
                break
        if not overlap_ok:
            break
    return CharacterizationReport(free, all_stars, tuple(comps), overlap_ok)


def edge_bound_check(H):
    """Edge count against C(n-1, 2) for a hypergraph free of counts 2 and 4
    on four vertices; non-free input raises with the violating 4-set."""
    w = find_q_violation(H, FAMILY_2_4)
    if w is not None:
        raise InputError(f"hypergraph is not {{(4,2),(4,4)}}-free: {w}", witness=w)
    n = H.n
    bound = (n - 1) * (n - 2) // 2 if n >= 1 else 0
    e = H.edge_count
    return e, bound, e <= bound


def two_graph_parity_check(H, method="auto"):
    """True iff every four vertices span an even number of edges.

    method "scan" enumerates all 4-sets directly; "switch" rebuilds the
    underlying graph from the link of vertex 0 and compares the odd-triple
    system blockwise, which is quadratic in n; "auto" switches over at
    n > 32.
    """
    n = H.n
    if n < 4:
        return True
    if method == "auto":
        method = "scan" if n <= 32 else "switch"
    if method == "scan":
        for S in combinations(range(n), 4):
            cnt = 0
            for t in combinations(S, 3):
                cnt += H._has(*t)
            if cnt & 1:
                return False
        return True
    if method != "switch":
        raise InputError(f"unknown parity method {method!r}")
    rows = [0] * n
    for y in range(1, n):
        for x in range(1, y):
            if H._has(0, x, y):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    mask = H.mask
    for c in range(n):
        blen = c * (c - 1) // 2
        block = 0
        rc = rows[c]
        for b in range(1, c):
            low = (1 << b) - 1
            chunk = (rows[b] ^ rc) & low
            if (rc >> b) & 1:
                chunk ^= low
            block |= chunk << (b * (b - 1) // 2)
        base = c * (c - 1) * (c - 2) // 6
        if (mask >> base) & ((1 << blen) - 1) != block:
            return False
    return True


def link_induced_c4_free(H, v):
    """True iff the link of v contains no induced 4-cycle."""
    L, _ = link_graph(H, v)
    for S in combinations(range(L.n), 4):
        degs = []
        cnt = 0
        for x in S:
            d = 0
            for y in S:
                if x != y and (L.rows[x] >> y) & 1:
                    d += 1
            degs.append(d)
            cnt += d
        if cnt == 8 and all(d == 2 for d in degs):
            return False
    return True


@dataclass(frozen=True)
class FFClassification:
    """Outcome of recognizing the two families free of counts {1, 3, 4}."""

    kind: str  # "blowup" | "ngon" | "neither"
    parts: tuple | None = None
    ngon_n: int | None = None
    witness: tuple | None = None

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "parts": list(self.parts) if self.parts is not None else None,
            "ngon_n": self.ngon_n,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _swap_fixes(H, x, y, edges):
    for e in edges:
        mapped = tuple(sorted(y if v == x else x if v == y else v for v in e))
        if not H._has(*mapped):
            return False
    return True


def _match_ngon(H):
    # consecutive polygon points are exactly the pairs of codegree 1;
    # recover the cycle and compare edge sets exactly
    n = H.n
    nbrs = [[] for _ in range(n)]
    for v in range(n):
        for u in range(v):
            if H.pair_row(u, v).bit_count() == 1:
                nbrs[u].append(v)
                nbrs[v].append(u)
    if any(len(x) != 2 for x in nbrs):
        return False
    cycle = [0, nbrs[0][0]]
    while len(cycle) < n:
        a, b = cycle[-2], cycle[-1]
        nxt = nbrs[b][0] if nbrs[b][0] != a else nbrs[b][1]
        if nxt == 0:
            break
        cycle.append(nxt)
    if len(cycle) != n:
        return False
    perm = [0] * n
    for i, v in enumerate(cycle):
        perm[v] = i
    return H.relabel(perm) == gen_ngon(n)


def _match_blowup(H):
    base = gen_base6()
    n = H.n
    edges = H.edge_list()
    # same-part vertices share no edge and swapping them fixes the edge set
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for y in range(n):
        for x in range(y):
            if H.pair_row(x, y) == 0 and _swap_fixes(H, x, y, edges):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    classes = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    classes = [classes[r] for r in sorted(classes)]
    c = len(classes)
    if c > 6:
        return None
    cls_of = [0] * n
    for i, cl in enumerate(classes):
        for v in cl:
            cls_of[v] = i
    qedges = set()
    for e in edges:
        t = tuple(sorted({cls_of[v] for v in e}))
        if len(t) != 3:
            return None
        qedges.add(t)
    for S in combinations(range(6), c):
        sub, _ = base.induced(S)
        sub_edges = set(sub.edges())
        if len(sub_edges) != len(qedges):
            continue
        for sigma in permutations(range(c)):
            mapped = {tuple(sorted((sigma[i], sigma[j], sigma[k]))) for i, j, k in qedges}
            if mapped != sub_edges:
                continue
            # exact reconstruction check: lay classes out in base-vertex
            # order and compare bitmaps
            parts = [0] * 6
            for i, cl in enumerate(classes):
                parts[S[sigma[i]]] = len(cl)
            order = sorted(range(c), key=lambda i: S[sigma[i]])
            perm = [0] * n
            pos = 0
            for i in order:
                for v in classes[i]:
                    perm[v] = pos
                    pos += 1
            blown = Hypergraph3(n, _blowup_edges(base, parts))
            if H.relabel(perm) == blown:
                return tuple(parts)
    return None


def classify_blowup_or_ngon(H):
    """Classify a hypergraph free of counts {1, 3, 4} on four vertices as a
    blow-up of the 6-vertex base or as a polygon system.

    Non-free input yields kind "neither" with a violating 4-set.  The
    polygon test runs first: at small orders a polygon system can also be
    written as a degenerate blow-up, and the polygon reading wins.
    Recognized blow-ups report one part-size vector (zeros mark unused base
    vertices); it is unique only up to automorphisms of the base.
    """
    w = find_q_violation(H, FAMILY_1_3_4)
    if w is not None:
        return FFClassification("neither", witness=w)
    if H.n >= 5 and H.n % 2 == 1 and _match_ngon(H):
        return FFClassification("ngon", ngon_n=H.n)
    parts = _match_blowup(H)
    if parts is not None:
        return FFClassification("blowup", parts=parts)
    return FFClassification("neither")

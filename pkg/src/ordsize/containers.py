"""Fingerprint-and-container algorithm over a point-line incidence
structure.

Every 2-independent point set I (at most two points per line) is mapped to
a small fingerprint S(I) subseteq I picked step by step; the final container
S union A is determined by the fingerprint alone and always contains I.
The fixed tie-breaking order on points is ascending index.
"""

from dataclasses import dataclass
from random import Random

from .core import Graph2, InputError


class ContractViolation(RuntimeError):
    """An internal invariant of the container algorithm failed."""


@dataclass(frozen=True)
class ContainerResult:
    fingerprint: tuple  # in pick order
    container: tuple  # sorted
    steps: int
    trace: tuple  # active-set sizes |A^t| for t = 0..steps

    def to_json_dict(self):
        return {
            "fingerprint": list(self.fingerprint),
            "container": list(self.container),
            "steps": self.steps,
            "trace": list(self.trace),
        }


def _mask_of(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _bits_of(m):
    out = []
    while m:
        b = m & -m
        out.append(b.bit_length() - 1)
        m ^= b
    return out


def is_two_independent(plane, points):
    """True iff every line of the plane meets the set in at most 2 points."""
    pm = _mask_of(points)
    return all((row & pm).bit_count() <= 2 for row in plane.y_rows)


def auxiliary_graph(plane, active, fingerprint):
    """The graph on the active set joining a, a' whenever some fingerprint
    point is collinear with both.  Depends only on (active, fingerprint).

    Returns (graph, mapping) with vertices remapped densely in sorted
    order.
    """
    verts = sorted(active)
    pos = {v: i for i, v in enumerate(verts)}
    amask = _mask_of(verts)
    adj = _aux_adjacency(plane, amask, fingerprint)
    edges = []
    for v in verts:
        row = adj.get(v, 0)
        for u in _bits_of(row):
            if u < v:
                edges.append((pos[u], pos[v]))
    return Graph2(len(verts), edges), tuple(verts)


def _aux_adjacency(plane, amask, fingerprint):
    adj = {}
    for s in fingerprint:
        lines = plane.x_rows[s]
        for y in _bits_of(lines):
            pts = plane.y_rows[y] & amask
            if pts.bit_count() < 2:
                continue
            for a in _bits_of(pts):
                adj[a] = adj.get(a, 0) | (pts & ~(1 << a))
    return adj


def greedy_max_degree_order(F):
    """Order the vertices by repeatedly taking a maximum-degree vertex of
    the subgraph induced by the not-yet-ordered suffix, ties to the lowest
    index."""
    order = []
    alive = (1 << F.n) - 1
    for _ in range(F.n):
        best_v, best_d = -1, -1
        m = alive
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            d = (F.rows[v] & alive).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        order.append(best_v)
        alive ^= 1 << best_v
    return tuple(order)


def run_container(plane, independent, steps):
    """Run the fingerprint algorithm for the given number of steps.

    Preconditions: the driving set is 2-independent against the plane's
    lines and strictly larger than ``steps``.  Output satisfies
    fingerprint subseteq I subseteq container, and the container depends on
    the fingerprint alone.
    """
    ivs = sorted(set(independent))
    imask = _mask_of(ivs)
    if not is_two_independent(plane, ivs):
        raise InputError("driving set is not 2-independent against the lines")
    if len(ivs) <= steps:
        raise InputError(f"need |I| > steps, got |I|={len(ivs)}, steps={steps}")
    amask = (1 << plane.nx) - 1
    fingerprint = []
    trace = [plane.nx]
    for _ in range(steps):
        adj = _aux_adjacency(plane, amask, fingerprint)
        # elimination order with ties to the lowest point index
        order = []
        alive = amask
        while alive:
            best_v, best_d = -1, -1
            m = alive
            while m:
                bit = m & -m
                v = bit.bit_length() - 1
                m ^= bit
                d = (adj.get(v, 0) & alive).bit_count()
                if d > best_d:
                    best_v, best_d = v, d
            order.append(best_v)
            alive ^= 1 << best_v
        chosen = None
        removed = 0
        for a in order:
            removed |= 1 << a
            if (imask >> a) & 1:
                chosen = a
                break
        if chosen is None:
            raise ContractViolation("driving set exhausted from the active set")
        nbrs = adj.get(chosen, 0)
        if nbrs & imask:
            raise ContractViolation(
                "an auxiliary neighbour of the chosen point lies in the driving set"
            )
        fingerprint.append(chosen)
        amask &= ~(removed | nbrs)
        if imask & ~(amask | _mask_of(fingerprint)):
            raise ContractViolation("driving set escaped the fingerprint-active union")
        trace.append(amask.bit_count())
    container = sorted(set(fingerprint) | set(_bits_of(amask)))
    return ContainerResult(tuple(fingerprint), tuple(container), steps, tuple(trace))


def decrease_audit(trace, n_points):
    """Check the per-step shrink inequality |A^(t+1)| <= (1 - N^(-1/4))|A^t|
    on the steps where it is claimed: t >= 2 N^(1/4) and |A^t| >= 10 sqrt(N).

    Small instances usually leave no step in scope; the audit reports, it
    does not assert.
    """
    tmin = 2 * n_points ** 0.25
    amin = 10 * n_points ** 0.5
    factor = 1 - n_points ** -0.25
    in_scope = 0
    satisfied = 0
    failures = []
    for t in range(len(trace) - 1):
        if t >= tmin and trace[t] >= amin:
            in_scope += 1
            if trace[t + 1] <= factor * trace[t]:
                satisfied += 1
            else:
                failures.append(t)
    return {
        "steps": len(trace) - 1,
        "in_scope": in_scope,
        "satisfied": satisfied,
        "failures": failures,
    }


def sample_two_independent(plane, seed, target=None):
    """Greedy 2-independent point set over a seeded random point order."""
    rng = Random(seed)
    pts = list(range(plane.nx))
    rng.shuffle(pts)
    counts = [0] * plane.ny
    picked = []
    for p in pts:
        lines = _bits_of(plane.x_rows[p])
        if all(counts[y] < 2 for y in lines):
            picked.append(p)
            for y in lines:
                counts[y] += 1
            if target is not None and len(picked) >= target:
                break
    return tuple(sorted(picked))

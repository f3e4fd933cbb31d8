"""Plain-text exchange formats.

Hypergraph format (".h3"): first non-comment line is ``n m r`` (vertex
count, edge count, uniformity); then m lines, each listing the vertices of
one edge in increasing order, 0-based, space separated; lines sorted
lexicographically.  ``#`` starts a comment line.  Serialization is
canonical: parsing then re-serializing a canonical file is the identity.

Set systems (".ss") use the same layout with r = 0 marking non-uniform,
variable-length block lines.  Uniform r >= 4 edge lists (emitted by the
iterated-partition generator) also use this layout with their own r.
"""

from .core import Graph2, Hypergraph3, InputError


def serialize_hypergraph(H, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{H.n} {H.edge_count} 3")
    lines.extend(" ".join(map(str, e)) for e in sorted(H.edges()))
    return "\n".join(lines) + "\n"


def serialize_graph(G, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{G.n} {G.edge_count} 2")
    lines.extend(f"{u} {v}" for u, v in sorted(G.edges()))
    return "\n".join(lines) + "\n"


def serialize_system(SS, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{SS.n} {len(SS.blocks)} 0")
    lines.extend(" ".join(map(str, b)) for b in sorted(SS.blocks))
    return "\n".join(lines) + "\n"


def serialize_uniform_edges(n, edges, r, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{n} {len(edges)} {r}")
    lines.extend(" ".join(map(str, e)) for e in sorted(edges))
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse any of the formats above.

    Returns a Hypergraph3 for r=3, a Graph2 for r=2, a solver.SetSystem for
    r=0, and (n, edges, r) for any other uniformity.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise InputError("empty input: missing header line")
    head = rows[0].split()
    if len(head) != 3:
        raise InputError(f"bad header {rows[0]!r}, expected 'n m r'")
    try:
        n, m, r = (int(x) for x in head)
    except ValueError:
        raise InputError(f"non-integer header {rows[0]!r}") from None
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but found {len(body)} lines")
    edges = []
    for line in body:
        try:
            vs = tuple(int(x) for x in line.split())
        except ValueError:
            raise InputError(f"non-integer vertex on line {line!r}") from None
        if any(vs[i] >= vs[i + 1] for i in range(len(vs) - 1)):
            raise InputError(f"vertices not strictly increasing on line {line!r}")
        if vs and (vs[0] < 0 or vs[-1] >= n):
            raise InputError(f"vertex out of range on line {line!r}")
        if r > 0 and len(vs) != r:
            raise InputError(f"expected {r} vertices on line {line!r}")
        edges.append(vs)
    if r == 3:
        return Hypergraph3(n, edges)
    if r == 2:
        return Graph2(n, edges)
    if r == 0:
        from .solver import SetSystem

        return SetSystem(n, edges)
    return n, edges, r


def parse_path(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def write_path(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)

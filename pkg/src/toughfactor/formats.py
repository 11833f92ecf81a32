"""Instance files: edge-list text with optional rotation block, graph6, DOT.

Edge-list format: one edge per line (two whitespace-separated integers),
``#`` starts a comment.  An optional embedding follows a line reading
``%rotation``, one vertex per line as ``v: n1 n2 ... nd`` in cyclic order.
The canonical serialization (sorted edges, vertices in order) round-trips
byte-identically.
"""

from __future__ import annotations

from typing import Optional

from .errors import ParseError, StructuralError
from .graph import Graph, PlanarEmbedding, euler_residual
from .twofactor import BarrierPair, TwoFactor, ComponentClassification


# ---------------------------------------------------------------------------
# edge list + rotation block
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> tuple[Graph, Optional[PlanarEmbedding]]:
    edges = []
    rotation_lines: list[tuple[int, str]] = []
    in_rotation = False
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "%rotation":
            if in_rotation:
                raise ParseError("duplicate %rotation block", lineno)
            in_rotation = True
            continue
        if in_rotation:
            rotation_lines.append((lineno, line))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two endpoints, got {len(parts)}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("endpoints must be integers", lineno)
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", lineno)
        if u == v:
            raise ParseError("loops are not allowed", lineno)
        edges.append((u, v))
        max_vertex = max(max_vertex, u, v)

    rotation: dict[int, tuple[int, ...]] = {}
    for lineno, line in rotation_lines:
        head, _, rest = line.partition(":")
        try:
            v = int(head.strip())
            nbrs = tuple(int(x) for x in rest.split())
        except ValueError:
            raise ParseError("malformed rotation line", lineno)
        if v in rotation:
            raise ParseError(f"duplicate rotation for vertex {v}", lineno)
        rotation[v] = nbrs
        max_vertex = max(max_vertex, v, *nbrs) if nbrs else max(max_vertex, v)

    n = max_vertex + 1
    try:
        g = Graph.from_edges(n, edges)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc
    if not rotation_lines:
        return g, None
    rows = []
    for v in range(n):
        rows.append(rotation.get(v, ()))
    try:
        emb = PlanarEmbedding(rows, outer_face=0)
    except StructuralError as exc:
        raise ParseError(f"rotation block inconsistent with the edge list: {exc}") from exc
    if not emb.matches(g):
        raise ParseError("rotation block inconsistent with the edge list")
    if euler_residual(g, emb) != 0 and g.is_connected():
        raise ParseError(
            f"embedding fails the Euler check (residual {euler_residual(g, emb)})"
        )
    return g, emb


def serialize_edge_list(g: Graph, embedding: Optional[PlanarEmbedding] = None) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    if embedding is not None:
        lines.append("%rotation")
        for v, rot in enumerate(embedding.rotation):
            lines.append(f"{v}: " + " ".join(str(u) for u in rot))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 (the published ASCII format for simple graphs)
# ---------------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise StructuralError("graph too large for this graph6 writer")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def graph6_decode(text: str) -> Graph:
    data = [ord(c) - 63 for c in text.strip()]
    if not data:
        raise ParseError("empty graph6 string")
    if any(d < 0 or d > 63 for d in data):
        raise ParseError("graph6 characters out of range")
    if data[0] == 63:
        if len(data) < 4:
            raise ParseError("truncated graph6 size")
        n = data[1] << 12 | data[2] << 6 | data[3]
        rest = data[4:]
    else:
        n = data[0]
        rest = data[1:]
    need = n * (n - 1) // 2
    bits = []
    for d in rest:
        for k in range(5, -1, -1):
            bits.append(d >> k & 1)
    if len(bits) < need:
        raise ParseError("graph6 body too short")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def parse_instance(text: str) -> tuple[Graph, Optional[PlanarEmbedding]]:
    """Edge-list text (with optional rotation block) or a graph6 line."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty instance")
    first = stripped.splitlines()[0].split("#", 1)[0].strip()
    # a single non-numeric token is graph6; anything else is an edge list
    if first and not first.startswith("%") and len(first.split()) == 1 and not first.isdigit():
        return graph6_decode(first), None
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def export_dot(
    g: Graph,
    barrier: Optional[BarrierPair] = None,
    classification: Optional[ComponentClassification] = None,
    two_factor: Optional[TwoFactor] = None,
) -> str:
    lines = ["graph instance {", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = []
        if barrier is not None:
            if v in barrier.s:
                attrs = ['style=filled', 'fillcolor="tomato"', 'xlabel="S"']
            elif v in barrier.t:
                attrs = ['style=filled', 'fillcolor="skyblue"', 'xlabel="T"']
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    if classification is not None:
        for links in sorted(classification.odd_by_links):
            for idx, comp in enumerate(classification.odd_by_links[links]):
                name = f"cluster_odd{links}_{idx}"
                inner = " ".join(str(v) for v in sorted(comp))
                lines.append(f"  subgraph {name} {{ label=\"{links}-link\"; {inner} }}")
    factor_edges = set(two_factor.edges) if two_factor is not None else set()
    for u, v in g.edges():
        if (u, v) in factor_edges or (v, u) in factor_edges:
            lines.append(f"  {u} -- {v} [penwidth=3];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

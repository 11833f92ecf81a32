"""Core graph, multigraph, and planar-embedding types.

Vertices are dense integers ``0..n-1`` for simple graphs.  Derived
multigraphs may use sparse identifiers; provenance back to the source graph
is carried by :class:`VertexMap` rather than by renaming conventions.

Embeddings are rotation systems given as input (typically emitted by the
generators); no planarity-testing algorithm lives here.  Face traversal
follows the fixed convention ``next(u, v) = (v, successor of u in the
rotation at v)``; only face identity matters downstream, the orientation is
just pinned for determinism.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import PreconditionError, StructuralError


# ---------------------------------------------------------------------------
# simple graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = len(self.adj)
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < n:
                    raise StructuralError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise StructuralError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise StructuralError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(s) for s in adj))

    @property
    def n(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def adjacency_masks(self) -> list[int]:
        masks = []
        for nbrs in self.adj:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return masks

    def is_complete(self) -> bool:
        return all(len(s) == self.n - 1 for s in self.adj)

    def components(self, removed: frozenset[int] = frozenset()) -> list[frozenset[int]]:
        """Connected components of the graph minus ``removed``."""
        seen = set(removed)
        out = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                for u in self.adj[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        queue.append(u)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph with dense relabeling.

        Returns the subgraph and the tuple mapping new index -> old vertex.
        """
        order = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(order)}
        adj = tuple(
            frozenset(index[u] for u in self.adj[v] if u in index) for v in order
        )
        return Graph(adj), order

    def with_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph(tuple(adj))


def edge_boundary(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one end in ``a`` and the other in ``b``."""
    bset = set(b)
    return sum(1 for v in a for u in g.adj[v] if u in bset)


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """BFS shortest-path length; ``None`` when unreachable."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise PreconditionError("vertex out of range")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None


def degree_three_separated(g: Graph) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check that distinct degree-3 vertices are pairwise at distance >= 3.

    Returns ``(True, None)`` when the condition holds (vacuously so when
    fewer than two degree-3 vertices exist), otherwise ``(False, (u, v))``
    with a violating pair.
    """
    deg3 = [v for v in range(g.n) if g.degree(v) == 3]
    targets = set(deg3)
    for u in deg3:
        # BFS to depth 2 suffices: any too-close pair is within distance 2.
        seen = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if seen[x] == 2:
                continue
            for y in g.adj[x]:
                if y not in seen:
                    seen[y] = seen[x] + 1
                    if y in targets and y != u:
                        return False, (min(u, y), max(u, y))
                    queue.append(y)
    return True, None


# ---------------------------------------------------------------------------
# multigraphs
# ---------------------------------------------------------------------------

class Multigraph:
    """Loopless multigraph with stable edge identifiers.

    Edge identifiers survive derived operations (deletion, contraction,
    smoothing, splitting) whenever the edge itself survives, so records can
    refer to edges unambiguously even among parallels.  Instances are
    treated as immutable; all operations return new multigraphs.
    """

    __slots__ = ("_vertices", "_edges", "_incident")

    def __init__(self, vertices: Iterable[int], edges: Mapping[int, tuple[int, int]]):
        self._vertices = frozenset(vertices)
        items = {}
        incident: dict[int, list[int]] = {v: [] for v in self._vertices}
        for eid in sorted(edges):
            u, v = edges[eid]
            if u == v:
                raise StructuralError(f"loop edge {eid} at {u}")
            if u not in self._vertices or v not in self._vertices:
                raise StructuralError(f"edge {eid} endpoint outside vertex set")
            items[eid] = (u, v) if u < v else (v, u)
            incident[u].append(eid)
            incident[v].append(eid)
        self._edges = items
        self._incident = {v: tuple(eids) for v, eids in incident.items()}

    @classmethod
    def from_pairs(cls, vertices: Iterable[int], pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        return cls(vertices, dict(enumerate(pairs)))

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls.from_pairs(range(g.n), g.edges())

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def edge_ids(self) -> list[int]:
        return sorted(self._edges)

    def n(self) -> int:
        return len(self._vertices)

    def edge_count(self) -> int:
        return len(self._edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._edges[eid]

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def other_end(self, eid: int, v: int) -> int:
        u, w = self._edges[eid]
        return w if v == u else u

    def neighbor_multiset(self, v: int) -> list[int]:
        return sorted(self.other_end(e, v) for e in self._incident[v])

    def simple_adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self._vertices}
        for u, v in self._edges.values():
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return sum(1 for e in self._edges.values() if e == key)

    def edge_between(self, u: int, v: int) -> Optional[int]:
        """Lowest edge id joining u and v, if any."""
        key = (u, v) if u < v else (v, u)
        best = None
        for eid in self._incident.get(u, ()):
            if self._edges[eid] == key and (best is None or eid < best):
                best = eid
        return best

    def next_edge_id(self) -> int:
        return max(self._edges, default=-1) + 1

    def components(self) -> list[frozenset[int]]:
        adj = self.simple_adjacency()
        seen: set[int] = set()
        out = []
        for start in sorted(self._vertices):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            out.append(frozenset(comp))
        return out

    def delete_vertices(self, doomed: Iterable[int]) -> "Multigraph":
        doomed = set(doomed)
        keep = self._vertices - doomed
        edges = {
            eid: e
            for eid, e in self._edges.items()
            if e[0] not in doomed and e[1] not in doomed
        }
        return Multigraph(keep, edges)

    def induced_component(self, vertices: Iterable[int]) -> "Multigraph":
        vs = set(vertices)
        edges = {eid: e for eid, e in self._edges.items() if e[0] in vs and e[1] in vs}
        return Multigraph(vs, edges)

    def __repr__(self):
        return f"Multigraph(n={self.n()}, m={self.edge_count()})"


@dataclass(frozen=True)
class VertexMap:
    """Maps vertices of a derived multigraph back to source vertex sets."""

    mapping: Mapping[int, frozenset[int]]

    def preimage(self, v: int) -> frozenset[int]:
        return self.mapping[v]

    def __contains__(self, v: int) -> bool:
        return v in self.mapping

    def compose(self, outer: "VertexMap") -> "VertexMap":
        """Map through ``outer`` first, then through this map."""
        out = {}
        for v, mids in outer.mapping.items():
            acc: set[int] = set()
            for m in mids:
                acc |= self.mapping[m]
            out[v] = frozenset(acc)
        return VertexMap(out)


def contract_subgraph(mg: Multigraph, vertices: Iterable[int]) -> tuple[Multigraph, int, VertexMap]:
    """Contract a connected vertex set to a single new vertex.

    Loops arising from internal edges are removed; parallel edges are kept.
    Returns ``(multigraph, new_vertex, map)`` where the map sends every
    surviving vertex to its preimage set.
    """
    vs = frozenset(vertices)
    if not vs <= mg.vertices:
        raise PreconditionError("contraction set outside the multigraph")
    if len(mg.induced_component(vs).components()) != 1:
        raise PreconditionError("contraction set does not induce a connected subgraph")
    new_v = max(mg.vertices) + 1 if mg.vertices else 0
    edges = {}
    for eid in mg.edge_ids:
        u, w = mg.endpoints(eid)
        iu, iw = u in vs, w in vs
        if iu and iw:
            continue
        if iu:
            u = new_v
        if iw:
            w = new_v
        edges[eid] = (u, w)
    keep = (mg.vertices - vs) | {new_v}
    mapping = {v: frozenset([v]) for v in mg.vertices - vs}
    mapping[new_v] = vs
    return Multigraph(keep, edges), new_v, VertexMap(mapping)


@dataclass(frozen=True)
class SmoothRecord:
    """Bookkeeping for one smoothed degree-2 vertex."""

    vertex: int
    left: int
    right: int
    left_edge: int
    right_edge: int
    new_edge: int


def smooth_degree2(mg: Multigraph, v: int) -> tuple[Multigraph, SmoothRecord]:
    """Replace the path ``u-v-w`` through a degree-2 vertex by the edge ``uw``."""
    if mg.degree(v) != 2:
        raise PreconditionError(f"vertex {v} has degree {mg.degree(v)}, not 2")
    e1, e2 = sorted(mg.incident(v))
    u, w = mg.other_end(e1, v), mg.other_end(e2, v)
    if u == w:
        raise PreconditionError(f"vertex {v} has parallel edges to {u}; cannot smooth")
    new_edge = mg.next_edge_id()
    edges = {eid: mg.endpoints(eid) for eid in mg.edge_ids if eid not in (e1, e2)}
    edges[new_edge] = (u, w)
    out = Multigraph(mg.vertices - {v}, edges)
    return out, SmoothRecord(v, u, w, e1, e2, new_edge)


def split_vertex(
    mg: Multigraph, v: int, edge_partition: Sequence[Iterable[int]]
) -> tuple[Multigraph, tuple[int, ...]]:
    """Split ``v`` into independent vertices, one per edge-end group.

    ``edge_partition`` must partition the edge ids incident to ``v`` into
    nonempty groups.  Group *i* keeps its edge-ends on the *i*-th new
    vertex; no edges are created among the new vertices.
    """
    groups = [tuple(g) for g in edge_partition]
    flat = [e for g in groups for e in g]
    incident = set(mg.incident(v))
    if any(not g for g in groups):
        raise PreconditionError("empty edge-end group")
    if len(flat) != len(set(flat)) or set(flat) != incident:
        raise PreconditionError("edge partition must cover each incident edge-end exactly once")
    base = max(mg.vertices) + 1
    new_ids = tuple(base + i for i in range(len(groups)))
    owner = {}
    for vid, group in zip(new_ids, groups):
        for e in group:
            owner[e] = vid
    edges = {}
    for eid in mg.edge_ids:
        u, w = mg.endpoints(eid)
        if u == v:
            u = owner[eid]
        if w == v:
            w = owner[eid]
        edges[eid] = (u, w)
    keep = (mg.vertices - {v}) | set(new_ids)
    return Multigraph(keep, edges), new_ids


# ---------------------------------------------------------------------------
# planar embeddings (rotation systems)
# ---------------------------------------------------------------------------

class PlanarEmbedding:
    """Rotation system: cyclic neighbor order per vertex.

    Face traversal uses the successor rule ``next(u, v) = (v, w)`` where
    ``w`` follows ``u`` in the rotation at ``v``.  ``outer_face`` optionally
    designates one face index (into :meth:`faces`) as the unbounded face;
    operations that need a notion of "inside" require it.
    """

    __slots__ = ("rotation", "outer_face", "_faces", "_face_of")

    def __init__(self, rotation: Sequence[Sequence[int]], outer_face: Optional[int] = None):
        self.rotation = tuple(tuple(r) for r in rotation)
        self.outer_face = outer_face
        n = len(self.rotation)
        seen = set()
        for v, rot in enumerate(self.rotation):
            for u in rot:
                if not 0 <= u < n:
                    raise StructuralError(f"rotation at {v} mentions out-of-range {u}")
                if u == v:
                    raise StructuralError(f"rotation at {v} contains a loop")
                if (v, u) in seen:
                    raise StructuralError(f"duplicated edge-end ({v},{u}) in rotation")
                seen.add((v, u))
        for v, u in seen:
            if (u, v) not in seen:
                raise StructuralError(f"edge-end ({u},{v}) missing from rotation")
        self._faces = None
        self._face_of = None

    @property
    def n(self) -> int:
        return len(self.rotation)

    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def matches(self, g: Graph) -> bool:
        return self.n == g.n and all(
            frozenset(rot) == g.adj[v] and len(rot) == len(g.adj[v])
            for v, rot in enumerate(self.rotation)
        )

    def successor(self, u: int, v: int) -> int:
        rot = self.rotation[v]
        i = rot.index(u)
        return rot[(i + 1) % len(rot)]

    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """All facial walks, each a cyclic tuple of directed edges."""
        if self._faces is None:
            self._faces = tuple(_trace_faces(self.rotation))
            self._face_of = {
                de: i for i, face in enumerate(self._faces) for de in face
            }
        return self._faces

    def face_of(self, u: int, v: int) -> int:
        """Index of the face whose walk uses the directed edge (u, v)."""
        self.faces()
        return self._face_of[(u, v)]

    def with_outer_face(self, idx: int) -> "PlanarEmbedding":
        emb = PlanarEmbedding(self.rotation, idx)
        return emb


def _trace_faces(rotation):
    index = {}
    for v, rot in enumerate(rotation):
        for i, u in enumerate(rot):
            index[(v, u)] = i
    faces = []
    used = set()
    for v0, rot in enumerate(rotation):
        for u0 in rot:
            if (v0, u0) in used:
                continue
            face = []
            u, v = v0, u0
            while (u, v) not in used:
                used.add((u, v))
                face.append((u, v))
                rot_v = rotation[v]
                w = rot_v[(index[(v, u)] + 1) % len(rot_v)]
                u, v = v, w
            faces.append(tuple(face))
    return faces


def faces(embedding: PlanarEmbedding) -> tuple[tuple[tuple[int, int], ...], ...]:
    return embedding.faces()


def face_vertices(face: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    return tuple(u for u, _ in face)


def euler_residual(g: Graph, embedding: PlanarEmbedding) -> int:
    """``n - e + f - 2``; zero exactly for connected plane embeddings."""
    if not embedding.matches(g):
        raise StructuralError("embedding does not match graph")
    return g.n - g.edge_count() + len(embedding.faces()) - 2


def is_plane_triangulation(g: Graph, embedding: PlanarEmbedding) -> bool:
    """True iff every facial walk of the embedding is a 3-cycle."""
    if not g.is_connected():
        raise PreconditionError("triangulation check requires a connected graph")
    if g.n < 3:
        raise PreconditionError("triangulation check requires n >= 3")
    if not embedding.matches(g):
        raise StructuralError("embedding does not match graph")
    if euler_residual(g, embedding) != 0:
        return False
    for face in embedding.faces():
        if len(face) != 3:
            return False
        vs = face_vertices(face)
        if len(set(vs)) != 3:
            return False
    return True


def embedding_from_faces(
    n: int, face_list: Iterable[Sequence[int]], outer_face: Optional[int] = None
) -> PlanarEmbedding:
    """Build a rotation system from a list of faces given as vertex cycles.

    The faces are re-oriented consistently (sphere orientability) before the
    per-vertex successor cycles are assembled, so the input order of each
    face is free.  Raises StructuralError when the faces do not describe a
    closed surface where every edge lies on exactly two faces.
    """
    oriented = _orient_faces([tuple(f) for f in face_list])
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for face in oriented:
        k = len(face)
        for i in range(k):
            u, v, w = face[i], face[(i + 1) % k], face[(i + 2) % k]
            if u in succ[v]:
                raise StructuralError(f"edge-end ({u},{v}) used by two faces in same direction")
            succ[v][u] = w
    rotation = []
    for v in range(n):
        nbrs = succ[v]
        if not nbrs:
            rotation.append(())
            continue
        start = min(nbrs)
        cycle = [start]
        cur = nbrs[start]
        while cur != start:
            cycle.append(cur)
            cur = nbrs[cur]
            if len(cycle) > len(nbrs):
                raise StructuralError(f"rotation at {v} does not close into one cycle")
        if len(cycle) != len(nbrs):
            raise StructuralError(f"rotation at {v} does not close into one cycle")
        rotation.append(tuple(cycle))
    return PlanarEmbedding(rotation, outer_face)


def _orient_faces(face_list):
    edge_faces: dict[frozenset, list[int]] = {}
    for i, face in enumerate(face_list):
        k = len(face)
        for j in range(k):
            key = frozenset((face[j], face[(j + 1) % k]))
            edge_faces.setdefault(key, []).append(i)
    for key, owners in edge_faces.items():
        if len(owners) != 2:
            raise StructuralError(f"edge {sorted(key)} lies on {len(owners)} faces, expected 2")
    oriented: dict[int, tuple] = {}
    flipped: dict[int, bool] = {}
    for seed in range(len(face_list)):
        if seed in oriented:
            continue
        oriented[seed] = face_list[seed]
        flipped[seed] = False
        queue = deque([seed])
        while queue:
            i = queue.popleft()
            face = oriented[i]
            k = len(face)
            directed = {(face[j], face[(j + 1) % k]) for j in range(k)}
            for j in range(k):
                key = frozenset((face[j], face[(j + 1) % k]))
                for other in edge_faces[key]:
                    if other == i:
                        continue
                    oface = face_list[other]
                    ok = len(oface)
                    odirected = {(oface[t], oface[(t + 1) % ok]) for t in range(ok)}
                    # the neighbor must traverse the shared edge in the
                    # opposite direction of the (already oriented) face i
                    needs_flip = bool(directed & odirected)
                    if other in oriented:
                        if flipped[other] != needs_flip:
                            raise StructuralError("faces cannot be oriented consistently")
                        continue
                    flipped[other] = needs_flip
                    oriented[other] = tuple(reversed(oface)) if needs_flip else oface
                    queue.append(other)
    return [oriented[i] for i in range(len(face_list))]


def induced_face(g: Graph, embedding: PlanarEmbedding, v: int) -> tuple[int, ...]:
    """Cyclic neighbor order of ``v``; a cycle on N(v) in a triangulation."""
    if not is_plane_triangulation(g, embedding):
        raise PreconditionError("induced faces are defined for plane triangulations")
    rot = embedding.rotation[v]
    k = len(rot)
    for i in range(k):
        if not g.has_edge(rot[i], rot[(i + 1) % k]):
            raise PreconditionError("neighbor ring of vertex is not a cycle")
    return rot


# ---------------------------------------------------------------------------
# regions of the embedding
# ---------------------------------------------------------------------------

def face_regions(embedding: PlanarEmbedding, barrier_edges: Iterable[frozenset]) -> list[int]:
    """Label faces by the region of the sphere they fall in.

    Two faces sharing an (undirected) edge belong to the same region unless
    the edge is in ``barrier_edges``.  Returns a region label per face index.
    """
    fs = embedding.faces()
    barrier = set(barrier_edges)
    parent = list(range(len(fs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, face in enumerate(fs):
        for (u, v) in face:
            if frozenset((u, v)) in barrier:
                continue
            j = embedding.face_of(v, u)
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return [find(i) for i in range(len(fs))]


@dataclass(frozen=True)
class InteriorResult:
    """Induced subgraphs on a closed walk plus its enclosed vertices."""

    int_vertices: frozenset[int]
    ints_vertices: frozenset[int]


def interior(g: Graph, embedding: PlanarEmbedding, walk: Sequence[int]) -> InteriorResult:
    """Vertices on and strictly inside a region-bounding closed walk.

    "Inside" is every region not containing the designated outer face, so
    the embedding must have ``outer_face`` set.
    """
    if embedding.outer_face is None:
        raise PreconditionError("interior needs a designated outer face")
    if len(walk) < 2 or walk[0] != walk[-1]:
        raise PreconditionError("walk must be closed (start == end)")
    walk_edges = set()
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise PreconditionError(f"walk step {a}-{b} is not an edge")
        walk_edges.add(frozenset((a, b)))
    regions = face_regions(embedding, walk_edges)
    outer_region = regions[embedding.outer_face]
    on_walk = frozenset(walk)
    inside = set()
    for v in range(g.n):
        if v in on_walk:
            continue
        if not g.adj[v]:
            continue
        u = next(iter(g.adj[v]))
        if regions[embedding.face_of(v, u)] != outer_region:
            inside.add(v)
    return InteriorResult(on_walk | inside, frozenset(inside))


def subgraph_faces(
    embedding: PlanarEmbedding, vertices: Iterable[int], edges: Iterable[frozenset]
) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Facial walks of a plane subgraph under the inherited rotation."""
    vs = set(vertices)
    es = set(edges)
    rotation = []
    for v in range(embedding.n):
        if v in vs:
            rotation.append(tuple(u for u in embedding.rotation[v] if frozenset((u, v)) in es))
        else:
            rotation.append(())
    return tuple(_trace_faces(rotation))

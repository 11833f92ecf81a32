"""Triangulation generators, named graphs, corpus plumbing, and the
small-graph catalog.

Everything randomized is driven by ``random.Random(seed)``: identical seeds
reproduce bit-identical graphs and embeddings across runs.  Triangulations
are built as face lists and converted to rotation systems at the end; every
emitted embedding designates face 0 as the outer face.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import CapacityError, PreconditionError
from .graph import Graph, PlanarEmbedding, embedding_from_faces, face_vertices, is_plane_triangulation
from .toughness import INFINITY, toughness
from .twofactor import has_two_factor, is_hamiltonian
from .graph import degree_three_separated


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two hubs joined by three internally disjoint paths with a, b, c
    internal vertices each (all at least 1 to stay simple)."""
    if min(a, b, c) < 1:
        raise PreconditionError("each branch needs an internal vertex")
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def tetrahedron() -> tuple[Graph, PlanarEmbedding]:
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    g = Graph.from_edges(4, itertools.combinations(range(4), 2))
    return g, embedding_from_faces(4, faces, outer_face=0)


def octahedron() -> tuple[Graph, PlanarEmbedding]:
    # poles 0 and 5, equator 1-2-3-4
    faces = []
    ring = [1, 2, 3, 4]
    for i in range(4):
        a, b = ring[i], ring[(i + 1) % 4]
        faces.append((0, a, b))
        faces.append((5, b, a))
    edges = [(0, v) for v in ring] + [(5, v) for v in ring]
    edges += [(ring[i], ring[(i + 1) % 4]) for i in range(4)]
    g = Graph.from_edges(6, edges)
    return g, embedding_from_faces(6, faces, outer_face=0)


def icosahedron() -> tuple[Graph, PlanarEmbedding]:
    # 0 on top, upper ring 1..5, lower ring 6..10, 11 at the bottom
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        a, b = up[i], up[(i + 1) % 5]
        c, d = lo[i], lo[(i + 1) % 5]
        faces.append((0, a, b))
        faces.append((a, c, b))
        faces.append((b, c, d))
        faces.append((11, d, c))
    edges = set()
    for f in faces:
        for i in range(3):
            u, v = f[i], f[(i + 1) % 3]
            edges.add((min(u, v), max(u, v)))
    g = Graph.from_edges(12, sorted(edges))
    return g, embedding_from_faces(12, faces, outer_face=0)


# ---------------------------------------------------------------------------
# triangulation generators
# ---------------------------------------------------------------------------

def _as_embedding(n: int, face_list: Sequence[tuple[int, int, int]]) -> PlanarEmbedding:
    return embedding_from_faces(n, face_list, outer_face=0)


def _faces_to_graph(n: int, face_list: Sequence[tuple[int, int, int]]) -> Graph:
    edges = set()
    for f in face_list:
        for i in range(3):
            u, v = f[i], f[(i + 1) % 3]
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


_K4_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def apollonian(n: int, seed: int) -> tuple[Graph, PlanarEmbedding]:
    """Stacked triangulation: repeatedly stellate a seed-chosen face of K4."""
    if n < 4:
        raise PreconditionError("triangulations need n >= 4")
    rng = random.Random(seed)
    faces = list(_K4_FACES)
    for new_v in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        faces.extend([(a, b, new_v), (b, c, new_v), (c, a, new_v)])
    return _faces_to_graph(n, faces), _as_embedding(n, faces)


def stellate(
    g: Graph, embedding: PlanarEmbedding, face_ids: Iterable[int]
) -> tuple[Graph, PlanarEmbedding]:
    """Insert one new degree-3 vertex into each selected triangular face."""
    if not is_plane_triangulation(g, embedding):
        raise PreconditionError("stellation needs a plane triangulation")
    all_faces = embedding.faces()
    chosen = sorted(set(face_ids))
    for i in chosen:
        if not 0 <= i < len(all_faces):
            raise PreconditionError(f"no face with id {i}")
    faces = [tuple(face_vertices(f)) for f in all_faces]
    new_faces = [f for i, f in enumerate(faces) if i not in set(chosen)]
    nxt = g.n
    for i in chosen:
        a, b, c = faces[i]
        new_faces.extend([(a, b, nxt), (b, c, nxt), (c, a, nxt)])
        nxt += 1
    return _faces_to_graph(nxt, new_faces), _as_embedding(nxt, new_faces)


def random_flip_triangulation(
    n: int, seed: int, flips: int
) -> tuple[Graph, PlanarEmbedding]:
    """Apollonian base followed by random diagonal flips (kept simple)."""
    if n < 4:
        raise PreconditionError("triangulations need n >= 4")
    rng = random.Random(seed)
    faces = list(_K4_FACES)
    for new_v in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        faces.extend([(a, b, new_v), (b, c, new_v), (c, a, new_v)])

    def edge_set():
        es = set()
        for f in faces:
            for i in range(3):
                u, v = f[i], f[(i + 1) % 3]
                es.add(frozenset((u, v)))
        return es

    for _ in range(flips):
        es = sorted(tuple(sorted(e)) for e in edge_set())
        u, v = es[rng.randrange(len(es))]
        touching = [i for i, f in enumerate(faces) if u in f and v in f]
        if len(touching) != 2:
            continue
        f1, f2 = faces[touching[0]], faces[touching[1]]
        c = next(x for x in f1 if x not in (u, v))
        d = next(x for x in f2 if x not in (u, v))
        if c == d or frozenset((c, d)) in edge_set():
            continue
        for i in sorted(touching, reverse=True):
            faces.pop(i)
        faces.extend([(u, c, d), (v, d, c)])
    return _faces_to_graph(n, faces), _as_embedding(n, faces)


# ---------------------------------------------------------------------------
# corpus entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic recipe for one corpus graph."""

    kind: str  # apollonian | stellation | random-flip
    n: int
    seed: int
    flips: int = 0

    def build(self) -> tuple[Graph, PlanarEmbedding]:
        if self.kind == "apollonian":
            return apollonian(self.n, self.seed)
        if self.kind == "random-flip":
            flips = self.flips if self.flips else 3 * self.n
            return random_flip_triangulation(self.n, self.seed, flips)
        if self.kind == "stellation":
            rng = random.Random(self.seed)
            lo = -((self.n + 4) // -3)
            base_n = max(4, min(self.n - 1, rng.randrange(lo, self.n)))
            k = self.n - base_n
            g, emb = random_flip_triangulation(base_n, rng.randrange(1 << 30), 2 * base_n)
            face_ids = rng.sample(range(len(emb.faces())), k)
            return stellate(g, emb, face_ids)
        raise PreconditionError(f"unknown generator kind {self.kind!r}")


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    embedding: PlanarEmbedding
    toughness: Union[Fraction, float]
    dist_ok: bool
    two_factor: bool
    hamiltonian: Optional[bool]
    provenance: str


def annotate(
    g: Graph,
    embedding: PlanarEmbedding,
    provenance: str = "",
    hamiltonian_guard: Optional[int] = 14,
) -> CorpusEntry:
    """Compute the exact metadata for one corpus graph."""
    tau = toughness(g).value
    dist_ok, _ = degree_three_separated(g)
    ok, _cert = has_two_factor(g)
    ham: Optional[bool] = None
    if hamiltonian_guard is not None and g.n <= hamiltonian_guard:
        ham, _ = is_hamiltonian(g, guard=hamiltonian_guard)
    return CorpusEntry(g, embedding, tau, dist_ok, ok, ham, provenance)


def filter_corpus(
    entries: Iterable[CorpusEntry],
    min_toughness: Optional[Fraction] = None,
    dist_ok: Optional[bool] = None,
    two_factor: Optional[bool] = None,
    hamiltonian: Optional[bool] = None,
) -> list[CorpusEntry]:
    out = []
    for e in entries:
        if min_toughness is not None:
            if e.toughness != INFINITY and e.toughness < min_toughness:
                continue
        if dist_ok is not None and e.dist_ok != dist_ok:
            continue
        if two_factor is not None and e.two_factor != two_factor:
            continue
        if hamiltonian is not None and e.hamiltonian != hamiltonian:
            continue
        out.append(e)
    return out


# ---------------------------------------------------------------------------
# exhaustive catalog of small connected graphs
# ---------------------------------------------------------------------------

_CATALOG_LIMIT = 8


def _refine_colors(g: Graph, colors: list[int]) -> list[int]:
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)
        ]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph) -> bytes:
    """Canonical adjacency string: minimum over color-respecting relabelings."""
    n = g.n
    colors = _refine_colors(g, [0] * n)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    best: Optional[bytes] = None
    for perm_parts in itertools.product(
        *(itertools.permutations(cell) for cell in ordered_cells)
    ):
        order = [v for part in perm_parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        bits = bytearray((n * (n - 1) // 2 + 7) // 8)
        idx = 0
        for i in range(n):
            vi = order[i]
            for j in range(i + 1, n):
                if order[j] in g.adj[vi]:
                    bits[idx >> 3] |= 1 << (idx & 7)
                idx += 1
        cand = bytes(bits)
        if best is None or cand < best:
            best = cand
    return bytes([n]) + (best or b"")


def _graph_from_canonical(blob: bytes) -> Graph:
    n = blob[0]
    bits = blob[1:]
    edges = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits[idx >> 3] >> (idx & 7) & 1:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def connected_graph_catalog(n: int) -> list[Graph]:
    """All connected graphs on exactly n vertices, one per isomorphism class.

    Built by vertex augmentation from the (n-1)-catalog with canonical-form
    deduplication; every connected graph has a non-cut vertex, so the
    augmentation is exhaustive.
    """
    if n < 1:
        raise PreconditionError("catalog needs n >= 1")
    if n > _CATALOG_LIMIT:
        raise CapacityError(f"catalog guarded at n <= {_CATALOG_LIMIT}")
    return [_graph_from_canonical(b) for b in _catalog_blobs(n)]


_catalog_cache: dict[int, list[bytes]] = {}


def _catalog_blobs(n: int) -> list[bytes]:
    if n in _catalog_cache:
        return _catalog_cache[n]
    if n == 1:
        blobs = [canonical_form(Graph.from_edges(1, []))]
    else:
        seen = set()
        for blob in _catalog_blobs(n - 1):
            parent = _graph_from_canonical(blob)
            for nbrs in range(1, 1 << (n - 1)):
                edges = parent.edges() + [
                    (i, n - 1) for i in range(n - 1) if nbrs >> i & 1
                ]
                child = Graph.from_edges(n, edges)
                seen.add(canonical_form(child))
        blobs = sorted(seen)
    _catalog_cache[n] = blobs
    return blobs

"""Barrier machinery: the link multigraph, its matchings, and the cutset.

Pipeline: contract the multi-link odd components of G - (S u T) (deleting
single-link and even components), strip S and the detached T-vertices,
smooth the two-link T-vertices into edges, drop the single-link T-vertices,
and split high-degree remainders so the final link multigraph has maximum
degree 3.  A maximal deficiency set of that multigraph then drives a chain
of covering matchings whose size bounds the number of 3-link components,
and per-component cut picks assemble an explicit cutset of G whose exact
ratio |S'|/c(G-S') is evaluated in rational arithmetic.

Bound evaluations (the 3-link bound, the cutset lower bound) are reporting
operations: both sides are computed exactly and recorded, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PreconditionError, StructuralError, ViolationError
from .graph import (
    Graph,
    Multigraph,
    PlanarEmbedding,
    SmoothRecord,
    VertexMap,
    contract_subgraph,
    edge_boundary,
    face_regions,
    face_vertices,
    is_plane_triangulation,
    smooth_degree2,
    split_vertex,
    subgraph_faces,
)
from .matching import (
    Matching,
    bipartite_cover_matching,
    component_bipartite_graph,
    cover_matching_with_quota,
    maximal_deficiency_set,
    merge_matchings,
    near_perfect_matching,
)
from .twofactor import BarrierPair, ComponentClassification


# ---------------------------------------------------------------------------
# link multigraph construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkGraphLedger:
    """Full trace of the contraction/smoothing/splitting pipeline."""

    barrier: BarrierPair
    cls: ComponentClassification
    g1: Multigraph
    g2: Multigraph
    g3: Multigraph
    h: Multigraph
    origin: VertexMap  # every H-vertex back to source vertices of g
    comp_of: dict[int, frozenset[int]]  # contracted vertex -> component
    tri_vertices: frozenset[int]  # contracted 3-link components, present in H
    heavy_vertices: frozenset[int]  # contracted >=5-link components (g1/g2/g3 era)
    smoothed: tuple[SmoothRecord, ...]
    smoothed_by_edge: dict[int, int]  # surviving edge id -> two-link T vertex
    split_sets: dict[int, tuple[int, ...]]  # split T vertex -> its pieces
    heavy_split: tuple[int, ...]  # pieces of the identified heavy vertex
    t_remnants: frozenset[int]  # unsplit multi-link T vertices in H
    heavy_link_mass: int  # total links of >=5-link components

    @property
    def split_vertices(self) -> frozenset[int]:
        out = set(self.heavy_split)
        for pieces in self.split_sets.values():
            out.update(pieces)
        return frozenset(out)

    def max_degree(self) -> int:
        return max((self.h.degree(v) for v in self.h.vertices), default=0)


def _validate_barrier_structure(g: Graph, barrier: BarrierPair, cls: ComponentClassification):
    if cls.s != barrier.s or cls.t != barrier.t:
        raise PreconditionError("classification belongs to a different pair")
    for y in barrier.t:
        if g.adj[y] & barrier.t:
            raise PreconditionError("T is not independent; not a biased-style barrier")
    for comp in cls.even_components:
        if edge_boundary(g, comp, barrier.t) != 0:
            raise PreconditionError("even component with T-edges; not a biased-style barrier")
    for comp in cls.odd_components():
        for y in barrier.t:
            if len(g.adj[y] & comp) > 1:
                raise PreconditionError("T-vertex with parallel links; not a biased-style barrier")


def _identify_vertices(mg: Multigraph, vs: frozenset[int]) -> tuple[Multigraph, int]:
    """Merge a vertex set into one new vertex, dropping arising loops."""
    new_v = max(mg.vertices) + 1
    edges = {}
    for eid in mg.edge_ids:
        u, w = mg.endpoints(eid)
        iu, iw = u in vs, w in vs
        if iu and iw:
            continue
        edges[eid] = (new_v if iu else u, new_v if iw else w)
    return Multigraph((mg.vertices - vs) | {new_v}, edges), new_v


def build_link_graph(
    g: Graph, barrier: BarrierPair, cls: ComponentClassification
) -> LinkGraphLedger:
    """Run the four construction steps and record every intermediate.

    Preconditions: the barrier satisfies the structural properties of a
    biased barrier (independent T, detached even components, single links
    per T-vertex and component); the classification matches the barrier.
    """
    _validate_barrier_structure(g, barrier, cls)
    mg0 = Multigraph.from_graph(g)

    # step 1: drop single-link odd components and even components, contract
    # every multi-link odd component to a point
    doomed = set()
    for comp in cls.odd_by_links.get(1, []):
        doomed |= comp
    for comp in cls.even_components:
        doomed |= comp
    cur = mg0.delete_vertices(doomed)
    comp_of: dict[int, frozenset[int]] = {}
    tri = set()
    heavy = set()
    for links in sorted(k for k in cls.odd_by_links if k >= 3):
        for comp in cls.odd_by_links[links]:
            cur, new_v, _ = contract_subgraph(cur, comp)
            comp_of[new_v] = comp
            (tri if links == 3 else heavy).add(new_v)
    g1 = cur

    # step 2: drop S and the detached T-vertices
    g2 = g1.delete_vertices(barrier.s | cls.t_isolated)

    # step 3: smooth the two-link T-vertices, then drop the single-link ones
    cur = g2
    smoothed = []
    smoothed_by_edge = {}
    for y in sorted(cls.t_multi):
        if y in cur.vertices and cur.degree(y) == 2:
            cur, rec = smooth_degree2(cur, y)
            smoothed.append(rec)
            smoothed_by_edge[rec.new_edge] = y
    cur = cur.delete_vertices(cls.t_single & cur.vertices)
    g3 = cur

    # step 4: split what is left of high-degree T-vertices, and identify
    # then split the >=5-link contractions as one block
    split_sets: dict[int, tuple[int, ...]] = {}
    for y in sorted(cls.t_multi):
        if y not in cur.vertices:
            continue
        d = cur.degree(y)
        if d < 4:
            continue
        ends = sorted(cur.incident(y))
        two_groups = (d - 2) // 2
        groups = [ends[2 * i : 2 * i + 2] for i in range(two_groups)]
        groups.append(ends[2 * two_groups :])
        cur, new_ids = split_vertex(cur, y, groups)
        split_sets[y] = new_ids

    heavy_split: tuple[int, ...] = ()
    heavy_link_mass = sum(links * len(lst) for links, lst in cls.odd_by_links.items() if links >= 5)
    if heavy:
        degree_sum = sum(cur.degree(v) for v in heavy)
        cur, merged = _identify_vertices(cur, frozenset(heavy))
        parts = -(degree_sum // -3)
        if parts == 0:
            cur = cur.delete_vertices({merged})
        else:
            ends = sorted(cur.incident(merged))
            groups = [ends[i : i + 3] for i in range(0, len(ends), 3)]
            if groups:
                cur, new_ids = split_vertex(cur, merged, groups)
            else:
                cur = cur.delete_vertices({merged})
                new_ids = ()
            pad = parts - len(new_ids)
            if pad > 0:
                base = max(cur.vertices) + 1 if cur.vertices else 0
                extra = tuple(range(base, base + pad))
                cur = Multigraph(
                    cur.vertices | set(extra),
                    {eid: cur.endpoints(eid) for eid in cur.edge_ids},
                )
                new_ids = new_ids + extra
            heavy_split = tuple(new_ids)
    h = cur

    if max((h.degree(v) for v in h.vertices), default=0) > 3:
        raise ViolationError("link multigraph exceeded maximum degree 3")

    t_remnants = frozenset(
        v for v in h.vertices if v in cls.t_multi
    )
    mapping: dict[int, frozenset[int]] = {}
    heavy_union = frozenset(v for hv in heavy for v in comp_of[hv])
    for v in h.vertices:
        if v in comp_of:
            mapping[v] = comp_of[v]
        elif v in cls.t_multi:
            mapping[v] = frozenset([v])
        elif v in heavy_split:
            mapping[v] = heavy_union
        else:
            for y, pieces in split_sets.items():
                if v in pieces:
                    mapping[v] = frozenset([y])
                    break
            else:
                raise StructuralError(f"untyped vertex {v} in the link multigraph")

    return LinkGraphLedger(
        barrier=barrier,
        cls=cls,
        g1=g1,
        g2=g2,
        g3=g3,
        h=h,
        origin=VertexMap(mapping),
        comp_of=comp_of,
        tri_vertices=frozenset(tri) & h.vertices,
        heavy_vertices=frozenset(heavy),
        smoothed=tuple(smoothed),
        smoothed_by_edge=smoothed_by_edge,
        split_sets=split_sets,
        heavy_split=heavy_split,
        t_remnants=t_remnants,
        heavy_link_mass=heavy_link_mass,
    )


# ---------------------------------------------------------------------------
# component survey of H - X
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkComponentSurvey:
    """Components of the link multigraph minus a maximal deficiency set."""

    x: frozenset[int]
    components: tuple[frozenset[int], ...]
    dense: tuple[frozenset[int], ...]  # odd, all 3-link, edge count >= 1.5n - 0.5
    dense_count: int
    split_component_count: int
    y_classes: dict[int, tuple[frozenset[int], ...]]  # keyed 0,1,2,3 (3 means >=3)
    remnant_components: tuple[frozenset[int], ...]


def survey_link_components(ledger: LinkGraphLedger, x: frozenset[int]) -> LinkComponentSurvey:
    h = ledger.h
    sub = h.delete_vertices(x)
    comps = tuple(sorted(sub.components(), key=min))
    split_vs = ledger.split_vertices
    dense = []
    y_classes: dict[int, list[frozenset[int]]] = {0: [], 1: [], 2: [], 3: []}
    remnant = []
    split_count = 0
    for comp in comps:
        if comp & split_vs:
            split_count += 1
            continue
        if not comp <= ledger.tri_vertices:
            remnant.append(comp)
            continue
        inner_edges = sum(
            1 for eid in h.edge_ids if h.endpoints(eid)[0] in comp and h.endpoints(eid)[1] in comp
        )
        if len(comp) >= 3 and len(comp) % 2 == 1 and 2 * inner_edges >= 3 * len(comp) - 1:
            dense.append(comp)
            continue
        links_to_x = sum(
            1
            for eid in h.edge_ids
            if (h.endpoints(eid)[0] in comp) != (h.endpoints(eid)[1] in comp)
            and (h.endpoints(eid)[0] in x or h.endpoints(eid)[1] in x)
        )
        y_classes[min(links_to_x, 3)].append(comp)
    return LinkComponentSurvey(
        x=x,
        components=comps,
        dense=tuple(dense),
        dense_count=len(dense),
        split_component_count=split_count,
        y_classes={k: tuple(v) for k, v in y_classes.items()},
        remnant_components=tuple(remnant),
    )


# ---------------------------------------------------------------------------
# the matching pipeline on B(X)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RepresentativePair:
    """One matched pair of 3-link contractions realized back in g."""

    edge_id: int
    comp_a: frozenset[int]
    comp_b: frozenset[int]
    vertex_a: int
    vertex_b: int
    through: int  # the two-link T-vertex the matched edge came from


@dataclass(frozen=True)
class MatchingPipelineReport:
    """Survey, matchings, and counts extracted from the link multigraph."""

    ledger: LinkGraphLedger
    deficiency_set: frozenset[int]
    survey: LinkComponentSurvey
    cover_x: Matching  # in B(X), saturates X
    quota_cover: Matching  # in B(X), covers the 3-class plus the quota
    merged: Matching  # in B(X), saturates X and the covered classes
    endpoint_edges: frozenset[int]  # H-edge ids realizing the merged matching
    full_matching: frozenset[int]  # H-edge ids: endpoint edges + per-component fills
    rep_pairs: tuple[RepresentativePair, ...]
    paired_t: frozenset[int]
    deficiency: int
    df_bound: Fraction
    df_bound_holds: bool


def matching_pipeline(g: Graph, ledger: LinkGraphLedger) -> MatchingPipelineReport:
    """Maximal deficiency set, covering matchings, and representative pairs.

    Raises ViolationError when a property guaranteed for maximal deficiency
    sets fails (signals an upstream bug, not bad input data).
    """
    h = ledger.h
    cls = ledger.cls
    x = maximal_deficiency_set(h)
    survey = survey_link_components(ledger, x)

    for comp in survey.components:
        if len(comp) % 2 == 0:
            raise ViolationError("even component beside a maximal deficiency set")

    b, _, comp_map = component_bipartite_graph(h, x)
    comp_vertex = {comp: cv for cv, comp in comp_map.items()}
    cover_x = bipartite_cover_matching(b, x)
    y_ids = {
        k: [comp_vertex[c] for c in survey.y_classes[k]] for k in (1, 2, 3)
    }
    quota_cover = cover_matching_with_quota(b, y_ids[3], (y_ids[1], y_ids[2]))
    covered_targets = {
        v for v in quota_cover.vertices(b) if v in comp_map
    }
    merged = merge_matchings(b, cover_x, quota_cover, x, covered_targets)

    # realize each merged edge as an H-edge with the same component endpoint
    endpoint_edges = set()
    endpoint_vertex: dict[frozenset[int], int] = {}
    for eid in sorted(merged.edge_ids):
        xv, cv = b.endpoints(eid)
        if xv in comp_map:
            xv, cv = cv, xv
        comp = comp_map[cv]
        best = None
        for heid in h.incident(xv):
            other = h.other_end(heid, xv)
            if other in comp and (best is None or heid < best):
                best = heid
        if best is None:
            raise ViolationError("bipartite edge without a realizing link edge")
        endpoint_edges.add(best)
        endpoint_vertex[comp] = h.other_end(best, xv)

    full = set(endpoint_edges)
    for comp in survey.components:
        if comp in endpoint_vertex:
            u = endpoint_vertex[comp]
        elif comp & ledger.split_vertices:
            u = min(comp & ledger.split_vertices)
        elif comp & ledger.t_remnants:
            u = min(comp & ledger.t_remnants)
        else:
            u = min(comp)
        fill = near_perfect_matching(h, comp, u)
        full |= fill.edge_ids

    occupied: set[int] = set()
    for eid in full:
        u, v = h.endpoints(eid)
        if u in occupied or v in occupied:
            raise ViolationError("assembled edge set is not a matching")
        occupied.add(u)
        occupied.add(v)
    _check_cross_cover(h, full, survey.components)

    rep_pairs = []
    seen_through = set()
    for eid in sorted(full):
        u, v = h.endpoints(eid)
        if u in ledger.tri_vertices and v in ledger.tri_vertices:
            y = ledger.smoothed_by_edge.get(eid)
            if y is None:
                raise ViolationError("3-link pair edge without a smoothing record")
            if y in seen_through:
                raise ViolationError("two matched pairs share a T-vertex")
            seen_through.add(y)
            comp_a, comp_b = ledger.comp_of[u], ledger.comp_of[v]
            na = g.adj[y] & comp_a
            nb = g.adj[y] & comp_b
            if len(na) != 1 or len(nb) != 1:
                raise ViolationError("two-link T-vertex with ambiguous attachments")
            rep_pairs.append(
                RepresentativePair(eid, comp_a, comp_b, min(na), min(nb), y)
            )

    deficiency = len(survey.components) - len(x)
    df_bound = Fraction(
        survey.dense_count + survey.split_component_count
    ) + Fraction(len(cls.t_single), 3)

    return MatchingPipelineReport(
        ledger=ledger,
        deficiency_set=x,
        survey=survey,
        cover_x=cover_x,
        quota_cover=quota_cover,
        merged=merged,
        endpoint_edges=frozenset(endpoint_edges),
        full_matching=frozenset(full),
        rep_pairs=tuple(rep_pairs),
        paired_t=frozenset(p.through for p in rep_pairs),
        deficiency=deficiency,
        df_bound=df_bound,
        df_bound_holds=Fraction(deficiency) <= df_bound,
    )


def _check_cross_cover(h: Multigraph, full: set[int], components):
    # every component may host at most one vertex matched across its border
    for comp in components:
        crossing = 0
        for eid in full:
            u, v = h.endpoints(eid)
            if (u in comp) != (v in comp):
                crossing += 1
        if crossing > 1:
            raise ViolationError("component matched across its border twice")


# ---------------------------------------------------------------------------
# the bound on 3-link components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriBound:
    """Exact-rational evaluation of the 3-link component bound."""

    lhs: int
    rep_pair_term: int  # twice the representative pair count
    excess_term: int  # total attachment excess over the multi-link T-vertices
    heavy_term: Fraction  # one third of the >=5 link mass
    t_single_term: Fraction
    dense_term: int
    slack_term: Fraction
    rhs: Fraction
    holds: bool


def tri_component_bound(report: MatchingPipelineReport, cls: ComponentClassification) -> TriBound:
    lhs = len(cls.odd_by_links.get(3, []))
    pairs = len(report.rep_pairs)
    heavy_mass = sum(
        links * len(lst) for links, lst in cls.odd_by_links.items() if links >= 5
    )
    heavy_term = Fraction(heavy_mass, 3)
    t_single_term = Fraction(len(cls.t_single), 3)
    slack = Fraction(2, 3)
    rhs = 2 * pairs + cls.t_multi_excess + heavy_term + t_single_term + report.survey.dense_count + slack
    return TriBound(
        lhs=lhs,
        rep_pair_term=2 * pairs,
        excess_term=cls.t_multi_excess,
        heavy_term=heavy_term,
        t_single_term=t_single_term,
        dense_term=report.survey.dense_count,
        slack_term=slack,
        rhs=rhs,
        holds=Fraction(lhs) <= rhs,
    )


# ---------------------------------------------------------------------------
# outerplanar covers and per-component cuts
# ---------------------------------------------------------------------------

def _three_coloring_by_peeling(d: Graph) -> list[int]:
    """Proper 3-coloring via the min-degree-2 peeling every outerplanar
    graph admits; StructuralError when the peeling gets stuck."""
    active = set(range(d.n))
    degrees = {v: d.degree(v) for v in active}
    order = []
    while active:
        pick = min((v for v in active if degrees[v] <= 2), default=None)
        if pick is None:
            raise StructuralError("peeling stuck; graph is not outerplanar")
        order.append(pick)
        active.remove(pick)
        for u in d.adj[pick]:
            if u in active:
                degrees[u] -= 1
    colors = [-1] * d.n
    for v in reversed(order):
        used = {colors[u] for u in d.adj[v] if colors[u] != -1}
        colors[v] = min(c for c in range(3) if c not in used)
    return colors


def outerplanar_cover(d: Graph, k: int) -> frozenset[int]:
    """Cover of size floor((4k+2)/3) whose removal isolates the rest.

    The remainder is a set of exactly ceil((2k+1)/3) isolated vertices,
    carved out of the largest class of a proper 3-coloring.
    """
    if k < 2:
        raise PreconditionError("defined for components with at least 5 links")
    if d.n != 2 * k + 1:
        raise PreconditionError(f"expected {2 * k + 1} vertices, got {d.n}")
    colors = _three_coloring_by_peeling(d)
    classes = [
        sorted(v for v in range(d.n) if colors[v] == c) for c in range(3)
    ]
    classes.sort(key=lambda cl: (-len(cl), cl))
    keep_count = -((2 * k + 1) // -3)
    keep = set(classes[0][:keep_count])
    return frozenset(v for v in range(d.n) if v not in keep)


def select_component_cut(
    g: Graph,
    cls: ComponentClassification,
    report: MatchingPipelineReport,
    comp: frozenset[int],
) -> frozenset[int]:
    """The vertices removed from one odd component when building the cutset."""
    links = cls.link_count_of(comp)
    if links == 1:
        raise PreconditionError("single-link components are never cut")
    attach = sorted(v for v in comp if len(g.adj[v] & cls.t) == 1)
    if any(len(g.adj[v] & cls.t) > 1 for v in comp):
        raise ViolationError("component vertex with two T-links; cut rule unsatisfiable")
    if links == 3:
        if len(attach) != 3:
            raise ViolationError("3-link component without three attachment vertices")
        rep = None
        for pair in report.rep_pairs:
            if pair.comp_a == comp:
                rep = pair.vertex_a
            elif pair.comp_b == comp:
                rep = pair.vertex_b
        if rep is not None:
            return frozenset([v for v in attach if v != rep][:2])
        return frozenset(attach[:2])
    if len(comp) == links:
        sub, order = g.induced(comp)
        k = (links - 1) // 2
        w = outerplanar_cover(sub, k)
        return frozenset(order[i] for i in w)
    if len(attach) != links:
        raise ViolationError("slack component without one attachment per link")
    if len(comp) - links < 1:
        raise ViolationError("slack component with no interior vertex")
    return frozenset(attach)


# ---------------------------------------------------------------------------
# cutset assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutsetReport:
    """The assembled cutset with its exact ratio and identity checks."""

    component_cuts: dict[frozenset[int], frozenset[int]]
    paired_t: frozenset[int]
    cutset: frozenset[int]
    predicted_size: int
    size_identity_holds: bool
    component_count: int
    lower_bound: int
    lower_bound_holds: bool
    ratio: Optional[Fraction]
    degenerate: bool


def assemble_cutset(
    g: Graph,
    barrier: BarrierPair,
    cls: ComponentClassification,
    report: MatchingPipelineReport,
) -> CutsetReport:
    """Union S with the per-component cuts and the paired T-vertices.

    The component count of g minus the cutset is computed exactly; the
    counting lower bound is evaluated against it and recorded.
    """
    cuts = {}
    for links in sorted(cls.odd_by_links):
        if links < 3:
            continue
        for comp in cls.odd_by_links[links]:
            cuts[comp] = select_component_cut(g, cls, report, comp)
    cutset = set(barrier.s) | set(report.paired_t)
    for cut in cuts.values():
        cutset |= cut

    tri_count = len(cls.odd_by_links.get(3, []))
    pair_count = len(report.rep_pairs)
    predicted = len(barrier.s) + 2 * tri_count + pair_count
    slack_total = 0
    for links in sorted(k for k in cls.odd_by_links if k >= 5):
        tight = len(cls.tight_by_links.get(links, []))
        slack = len(cls.slack_by_links.get(links, []))
        slack_total += slack
        predicted += (2 * links // 3) * tight + links * slack

    comps = g.components(removed=frozenset(cutset))
    count = len(comps)
    lower = len(barrier.t) + len(report.paired_t) + slack_total
    degenerate = count <= 1
    ratio = None if degenerate else Fraction(len(cutset), count)
    return CutsetReport(
        component_cuts=cuts,
        paired_t=report.paired_t,
        cutset=frozenset(cutset),
        predicted_size=predicted,
        size_identity_holds=(len(cutset) == predicted),
        component_count=count,
        lower_bound=lower,
        lower_bound_holds=(count >= lower),
        ratio=ratio,
        degenerate=degenerate,
    )


# ---------------------------------------------------------------------------
# dense-component walk inspection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceReport:
    boundary: tuple[int, ...]
    good: bool  # no edge from the walk into single-link T-vertices
    interior_vertices: frozenset[int]
    walk_vertices: frozenset[int]
    walk_in_allowed: bool  # boundary of the interior stays in S u U1
    s_vertices_on_cycles: bool
    qualifying: bool


@dataclass(frozen=True)
class DenseWalkReport:
    component: frozenset[int]
    lifted_vertices: frozenset[int]
    face_count: int
    good_count: int
    qualifying_count: int
    faces: tuple[FaceReport, ...]


def _bridges(vertices: set[int], edges: set[frozenset]) -> set[frozenset]:
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    index = {}
    low = {}
    bridges = set()
    counter = [0]

    def dfs(root):
        stack = [(root, None, iter(sorted(adj[root])))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u not in index:
                    index[u] = low[u] = counter[0]
                    counter[0] += 1
                    stack.append((u, v, iter(sorted(adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], index[u])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > index[pv]:
                        bridges.add(frozenset((pv, v)))

    for v in sorted(vertices):
        if v not in index:
            dfs(v)
    return bridges


def dense_component_walks(
    g: Graph,
    embedding: PlanarEmbedding,
    ledger: LinkGraphLedger,
    report: MatchingPipelineReport,
) -> tuple[DenseWalkReport, ...]:
    """Inspect the region boundaries of every dense component.

    For each face of the lifted subgraph, the boundary walk of its interior
    is computed and tested: it must stay inside S union the single-link
    component vertices, and each S-vertex on it must lie on a cycle of the
    walk.  Reporting only; at least two qualifying faces are expected.
    """
    if not is_plane_triangulation(g, embedding):
        raise PreconditionError("walk inspection needs a plane triangulation")
    cls = ledger.cls
    u1 = cls.u_by_links.get(1, frozenset())
    allowed = cls.s | u1
    out = []
    for comp in report.survey.dense:
        lift_vs = set()
        for hv in comp:
            lift_vs |= ledger.comp_of[hv]
        for eid in ledger.h.edge_ids:
            u, v = ledger.h.endpoints(eid)
            if u in comp and v in comp:
                y = ledger.smoothed_by_edge.get(eid)
                if y is None:
                    raise StructuralError("dense component edge without smoothing record")
                lift_vs.add(y)
        lift_edges = {
            frozenset((u, v))
            for u in lift_vs
            for v in g.adj[u]
            if v in lift_vs and u < v
        }
        sub_faces = subgraph_faces(embedding, lift_vs, lift_edges)
        regions = face_regions(embedding, lift_edges)
        reports = []
        for face in sub_faces:
            boundary = face_vertices(face)
            good = edge_boundary(g, set(boundary), cls.t_single) == 0
            rep_face = embedding.face_of(*face[0])
            label = regions[rep_face]
            inside = frozenset(
                v
                for v in range(g.n)
                if v not in lift_vs
                and g.adj[v]
                and regions[embedding.face_of(v, min(g.adj[v]))] == label
            )
            walk_vs, on_cycle_ok = _interior_walk(g, embedding, inside, rep_face, cls.s)
            walk_ok = bool(walk_vs) and walk_vs <= allowed
            qualifying = good and walk_ok and on_cycle_ok
            reports.append(
                FaceReport(
                    boundary=boundary,
                    good=good,
                    interior_vertices=inside,
                    walk_vertices=walk_vs,
                    walk_in_allowed=walk_ok,
                    s_vertices_on_cycles=on_cycle_ok,
                    qualifying=qualifying,
                )
            )
        out.append(
            DenseWalkReport(
                component=comp,
                lifted_vertices=frozenset(lift_vs),
                face_count=len(reports),
                good_count=sum(1 for r in reports if r.good),
                qualifying_count=sum(1 for r in reports if r.qualifying),
                faces=tuple(reports),
            )
        )
    return tuple(out)


def _interior_walk(g, embedding, inside, rep_face, s_vertices):
    """Boundary walk of the interior region facing the given face."""
    if not inside:
        return frozenset(), False
    inner_edges = {
        frozenset((u, v)) for u in inside for v in g.adj[u] if v in inside and u < v
    }
    inner_faces = subgraph_faces(embedding, inside, inner_edges)
    regions = face_regions(embedding, inner_edges)
    outer_label = regions[rep_face]
    walk_vs: set[int] = set()
    walk_edges: set[frozenset] = set()
    for face in inner_faces:
        if not face:
            continue
        if regions[embedding.face_of(*face[0])] != outer_label:
            continue
        walk_vs.update(face_vertices(face))
        walk_edges.update(frozenset(e) for e in face)
    isolated = {
        v for v in inside if not (g.adj[v] & inside)
    }
    walk_vs |= isolated
    if not walk_vs:
        return frozenset(), False
    bridges = _bridges(set(walk_vs), walk_edges)
    on_cycle = True
    for v in walk_vs & s_vertices:
        incident = [e for e in walk_edges if v in e]
        if not any(e not in bridges for e in incident):
            on_cycle = False
            break
    return frozenset(walk_vs), on_cycle

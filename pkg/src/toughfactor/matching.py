"""Matchings, deficiency, and the bipartite covering machinery.

Maximum matching runs a blossom-contraction search (compiled kernel when
available).  Deficiency is computed exhaustively over vertex subsets at
desk scale, with a matching-structure fallback for larger inputs; the
maximal witness returned is inclusion-maximal, which is what the
factor-critical component properties require.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import HallViolationError, PreconditionError, ViolationError
from .graph import Multigraph, VertexMap

_EXHAUSTIVE_LIMIT = 18


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edge identifiers of some multigraph."""

    edge_ids: frozenset[int]

    @classmethod
    def of(cls, ids: Iterable[int]) -> "Matching":
        return cls(frozenset(ids))

    def __len__(self):
        return len(self.edge_ids)

    def vertices(self, mg: Multigraph) -> frozenset[int]:
        out = set()
        for eid in self.edge_ids:
            u, v = mg.endpoints(eid)
            out.add(u)
            out.add(v)
        return frozenset(out)

    def pairs(self, mg: Multigraph) -> list[tuple[int, int]]:
        return sorted(mg.endpoints(eid) for eid in self.edge_ids)

    def is_valid(self, mg: Multigraph) -> bool:
        seen = set()
        for eid in self.edge_ids:
            try:
                u, v = mg.endpoints(eid)
            except KeyError:
                return False
            if u in seen or v in seen:
                return False
            seen.add(u)
            seen.add(v)
        return True


@dataclass(frozen=True)
class DeficiencyCertificate:
    """Exact deficiency together with a witness attaining it."""

    deficiency: int
    witness: frozenset[int]
    odd_component_count: int

    def __post_init__(self):
        if self.odd_component_count - len(self.witness) != self.deficiency:
            raise ViolationError("deficiency certificate does not balance")


def _dense(mg: Multigraph):
    order = sorted(mg.vertices)
    index = {v: i for i, v in enumerate(order)}
    adj_sets = mg.simple_adjacency()
    lists = [sorted(index[u] for u in adj_sets[v]) for v in order]
    masks = []
    for v in order:
        m = 0
        for u in adj_sets[v]:
            m |= 1 << index[u]
        masks.append(m)
    return order, index, lists, masks


def _mask_to_set(mask: int, order: Sequence[int]) -> frozenset[int]:
    return frozenset(order[i] for i in range(len(order)) if mask >> i & 1)


def max_matching(mg: Multigraph) -> Matching:
    """Maximum-cardinality matching; parallel edges resolved to lowest id."""
    order, _, lists, _ = _dense(mg)
    mate = kernels.blossom_matching(len(order), lists)
    ids = set()
    for i, j in enumerate(mate):
        if j > i:
            eid = mg.edge_between(order[i], order[j])
            ids.add(eid)
    return Matching.of(ids)


def _odd_components(mg: Multigraph, removed: frozenset[int]) -> int:
    sub = mg.delete_vertices(removed)
    return sum(1 for comp in sub.components() if len(comp) & 1)


def deficiency(mg: Multigraph) -> DeficiencyCertificate:
    """Exact df = max over X of odd(G - X) - |X|, with a witness."""
    if mg.n() == 0:
        return DeficiencyCertificate(0, frozenset(), 0)
    if mg.n() <= _EXHAUSTIVE_LIMIT:
        order, _, _, masks = _dense(mg)
        df, x_mask = kernels.deficiency_scan(masks)
        witness = _mask_to_set(x_mask, order)
    else:
        witness = _structure_attaining_set(mg)
        df = _odd_components(mg, witness) - len(witness)
    return DeficiencyCertificate(df, witness, df + len(witness))


def _matching_number(mg: Multigraph) -> int:
    return len(max_matching(mg))


def _structure_attaining_set(mg: Multigraph) -> frozenset[int]:
    # Inessential vertices: missed by some maximum matching.  Their
    # neighborhood outside the set attains the deficiency (Gallai-Edmonds).
    nu = _matching_number(mg)
    inessential = set()
    for v in sorted(mg.vertices):
        if _matching_number(mg.delete_vertices({v})) == nu:
            inessential.add(v)
    adj = mg.simple_adjacency()
    around = set()
    for v in inessential:
        around |= adj[v]
    return frozenset(around - inessential)


def is_factor_critical(mg: Multigraph) -> bool:
    """Deleting any single vertex leaves a perfectly matchable graph."""
    n = mg.n()
    if n % 2 == 0:
        return False
    for v in mg.vertices:
        sub = mg.delete_vertices({v})
        if 2 * _matching_number(sub) != n - 1:
            return False
    return True


def maximal_deficiency_set(mg: Multigraph) -> frozenset[int]:
    """Inclusion-maximal X with odd(G-X) - |X| = df(G).

    At desk scale the exhaustive scan already returns a maximum-cardinality
    attaining set, which is maximal a fortiori.  Beyond the scan limit we
    grow a structure-derived attaining set: a vertex of an even component
    always extends, and a non-factor-critical odd component D extends by
    u plus an attaining set of D - u.
    """
    if mg.n() == 0:
        return frozenset()
    if mg.n() <= _EXHAUSTIVE_LIMIT:
        return deficiency(mg).witness
    x = set(_structure_attaining_set(mg))
    while True:
        sub = mg.delete_vertices(x)
        grown = False
        for comp in sub.components():
            if len(comp) % 2 == 0:
                x.add(min(comp))
                grown = True
                break
            part = sub.induced_component(comp)
            if is_factor_critical(part):
                continue
            for u in sorted(comp):
                inner = part.delete_vertices({u})
                if 2 * _matching_number(inner) != len(comp) - 1:
                    x.add(u)
                    x |= deficiency(inner).witness
                    grown = True
                    break
            if grown:
                break
        if not grown:
            return frozenset(x)


def near_perfect_matching(mg: Multigraph, component: Iterable[int], u: int) -> Matching:
    """Perfect matching of D - u for a component D of G - X.

    Must always exist when X is a maximal deficiency set (the components
    are factor-critical); a failure therefore signals a broken caller.
    """
    comp = set(component)
    if u not in comp:
        raise PreconditionError(f"vertex {u} not in the component")
    sub = mg.induced_component(comp - {u})
    m = max_matching(sub)
    if 2 * len(m) != len(comp) - 1:
        raise ViolationError(f"component minus {u} has no perfect matching")
    return m


def component_bipartite_graph(
    mg: Multigraph, x: Iterable[int]
) -> tuple[Multigraph, VertexMap, dict[int, frozenset[int]]]:
    """Contract each component of G - X to one vertex; keep X as the other side.

    One edge per (x, component) pair with a G-adjacency, regardless of how
    many parallel edges realize it.  Returns the bipartite multigraph, the
    vertex map back to source vertices, and the component map keyed by the
    new component-vertex ids.
    """
    xs = frozenset(x)
    if not xs <= mg.vertices:
        raise PreconditionError("X is not a subset of the vertex set")
    rest = mg.delete_vertices(xs)
    comps = sorted(rest.components(), key=min)
    base = (max(mg.vertices) + 1) if mg.vertices else 0
    comp_vertex = {i: base + i for i in range(len(comps))}
    adj = mg.simple_adjacency()
    pairs = []
    for i, comp in enumerate(comps):
        touching = set()
        for v in comp:
            touching |= adj[v] & xs
        for xv in sorted(touching):
            pairs.append((xv, comp_vertex[i]))
    b = Multigraph.from_pairs(set(xs) | set(comp_vertex.values()), pairs)
    mapping = {xv: frozenset([xv]) for xv in xs}
    comp_map = {}
    for i, comp in enumerate(comps):
        mapping[comp_vertex[i]] = comp
        comp_map[comp_vertex[i]] = comp
    return b, VertexMap(mapping), comp_map


def _kuhn_augment(b: Multigraph, start: int, mate: dict[int, Optional[int]]) -> bool:
    """One augmenting-path attempt from an unmatched vertex (alternating DFS)."""
    seen = set()
    stack = [(start, iter(sorted(set(b.neighbor_multiset(start)))))]
    parent = {start: None}
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if u in seen:
                continue
            seen.add(u)
            parent[u] = v
            if mate.get(u) is None:
                # augment along parent chain
                cur = u
                while cur is not None:
                    prev = parent[cur]
                    mate[cur] = prev
                    mate[prev] = cur
                    cur = parent.get(prev)
                return True
            nxt = mate[u]
            parent[nxt] = u
            stack.append((nxt, iter(sorted(set(b.neighbor_multiset(nxt))))))
            advanced = True
            break
        if not advanced:
            stack.pop()
    return False


def _mate_to_matching(b: Multigraph, mate: dict[int, Optional[int]], side: frozenset[int]) -> Matching:
    ids = set()
    for v in side:
        u = mate.get(v)
        if u is not None:
            ids.add(b.edge_between(v, u))
    return Matching.of(ids)


def bipartite_cover_matching(b: Multigraph, side: Iterable[int]) -> Matching:
    """Matching saturating every vertex of ``side`` in a bipartite multigraph.

    Raises HallViolationError carrying the violating subset when impossible.
    """
    xs = frozenset(side)
    mate: dict[int, Optional[int]] = {}
    for xv in sorted(xs):
        if not _kuhn_augment(b, xv, mate):
            violator = _hall_violator(b, xs, mate, xv)
            raise HallViolationError(f"no matching covers vertex {xv}", violator)
    return _mate_to_matching(b, mate, xs)


def _hall_violator(b, side, mate, stuck):
    # Alternating reachability from the stuck vertex: the reached side
    # vertices have a joint neighborhood smaller than themselves.
    reach = {stuck}
    frontier = [stuck]
    nbrs = set()
    while frontier:
        v = frontier.pop()
        for u in set(b.neighbor_multiset(v)):
            if u in nbrs:
                continue
            nbrs.add(u)
            m = mate.get(u)
            if m is not None and m not in reach:
                reach.add(m)
                frontier.append(m)
    return frozenset(reach)


def cover_matching_with_quota(
    b: Multigraph,
    must_cover: Iterable[int],
    quota_classes: tuple[Iterable[int], Iterable[int]],
) -> Matching:
    """Matching covering all of ``must_cover`` plus a quota of the classes.

    ``quota_classes`` = (single-link class, double-link class); the result
    covers at least ceil((|Y1| + 2|Y2|) / 3) of their union.  Implemented by
    augmenting the bipartite graph with floor((2|Y1| + |Y2|) / 3) helper
    vertices of degree 3 (class vertices capped at degree 3), matching
    everything, then discarding helper edges.
    """
    y3 = sorted(set(must_cover))
    y1 = sorted(set(quota_classes[0]))
    y2 = sorted(set(quota_classes[1]))
    quota = -((len(y1) + 2 * len(y2)) // -3)
    z_count = (2 * len(y1) + len(y2)) // 3

    helper_base = (max(b.vertices) + 1) if b.vertices else 0
    helpers = list(range(helper_base, helper_base + z_count))
    capacity = {y: 3 - b.degree(y) for y in y1 + y2}
    pairs = [b.endpoints(eid) for eid in b.edge_ids]
    targets = y1 + y2
    cursor = 0
    if targets:
        for z in helpers:
            for _ in range(3):
                scanned = 0
                while scanned < len(targets) and capacity[targets[cursor % len(targets)]] <= 0:
                    cursor += 1
                    scanned += 1
                if scanned >= len(targets):
                    break
                y = targets[cursor % len(targets)]
                capacity[y] -= 1
                cursor += 1
                pairs.append((z, y))
    aug = Multigraph.from_pairs(set(b.vertices) | set(helpers), pairs)

    mate: dict[int, Optional[int]] = {}
    for y in y3:
        if not _kuhn_augment(aug, y, mate):
            violator = _hall_violator(aug, frozenset(y3), mate, y)
            raise HallViolationError(f"cannot cover required vertex {y}", violator)
    for y in y1 + y2:
        if mate.get(y) is None:
            _kuhn_augment(aug, y, mate)

    ids = set()
    covered = 0
    for y in y3 + y1 + y2:
        partner = mate.get(y)
        if partner is None or partner in helpers:
            continue
        ids.add(b.edge_between(y, partner))
        if y not in y3:
            covered += 1
    if covered < quota:
        raise ViolationError(
            f"quota not met: covered {covered} of class vertices, need {quota}"
        )
    return Matching.of(ids)


def merge_matchings(
    b: Multigraph,
    m1: Matching,
    m2: Matching,
    cover1: Iterable[int],
    cover2: Iterable[int],
) -> Matching:
    """Combine matchings saturating ``cover1`` resp. ``cover2`` into one
    matching saturating their union (alternating-component case analysis)."""
    need1 = frozenset(cover1)
    need2 = frozenset(cover2)
    union_ids = m1.edge_ids | m2.edge_ids
    incident: dict[int, list[int]] = {}
    for eid in union_ids:
        u, v = b.endpoints(eid)
        incident.setdefault(u, []).append(eid)
        incident.setdefault(v, []).append(eid)

    chosen: set[int] = set()
    seen_edges: set[int] = set()
    for start in sorted(incident):
        if len(incident[start]) != 1:
            continue
        eid0 = incident[start][0]
        if eid0 in seen_edges:
            continue
        # walk the path from this endpoint
        path = []
        v, eid = start, eid0
        while eid is not None:
            seen_edges.add(eid)
            path.append(eid)
            v = b.other_end(eid, v)
            eid = next((e for e in incident[v] if e not in seen_edges), None)
        if len(path) % 2 == 1:
            chosen.update(path[0::2])
        elif start not in need1 | need2:
            chosen.update(path[1::2])  # skips the head only
        elif v not in need1 | need2:
            chosen.update(path[0::2])  # skips the tail only
        else:
            raise ViolationError("even alternating path with both ends required")
    for eid in sorted(union_ids - seen_edges):
        if eid in seen_edges:
            continue
        # remaining structures are even alternating cycles; keep the m1 side
        cyc = []
        u0, _ = b.endpoints(eid)
        v, cur = u0, eid
        while cur is not None and cur not in seen_edges:
            seen_edges.add(cur)
            cyc.append(cur)
            v = b.other_end(cur, v)
            cur = next((e for e in incident[v] if e not in seen_edges), None)
        chosen.update(e for e in cyc if e in m1.edge_ids)

    merged = Matching.of(chosen)
    vs = merged.vertices(b)
    if not merged.is_valid(b) or not (need1 | need2) <= vs:
        raise ViolationError("merged matching does not saturate the required sets")
    return merged


def berge_identity_holds(mg: Multigraph) -> bool:
    """|maximum matching| == (n - df)/2, checked with independent sides."""
    m = max_matching(mg)
    df = deficiency(mg).deficiency
    return 2 * len(m) == mg.n() - df

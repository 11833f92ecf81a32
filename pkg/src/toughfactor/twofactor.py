"""Tutte's 2-factor condition: delta evaluation, decisions, barriers.

The production decision path reduces the degree-2-everywhere subgraph
question to a perfect matching in the classical degree-constraint gadget
and runs the blossom kernel on it.  The exhaustive delta scan over all
disjoint (S, T) pairs is kept strictly as the independent oracle and as the
barrier extractor; the two routes never share code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from . import kernels
from .errors import CapacityError, PreconditionError, ViolationError
from .graph import Graph, edge_boundary

DEFAULT_SCAN_GUARD = 18


@dataclass(frozen=True)
class BarrierPair:
    """Disjoint (S, T) witnessing delta(S, T) <= -2."""

    s: frozenset[int]
    t: frozenset[int]
    delta: int


@dataclass(frozen=True)
class TwoFactor:
    """Edge set of a spanning 2-regular subgraph."""

    edges: frozenset[tuple[int, int]]

    def is_valid(self, g: Graph) -> bool:
        deg = [0] * g.n
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            deg[u] += 1
            deg[v] += 1
        return all(d == 2 for d in deg)


def _masks(g: Graph, vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _unmask(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if mask >> v & 1)


def tutte_delta(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """delta(S,T) = 2|S| + sum_{y in T} d_{G-S}(y) - 2|T| - c(S,T).

    c(S,T) counts the components of G - (S u T) with an odd number of edges
    into T.  Always even.
    """
    ss, ts = frozenset(s), frozenset(t)
    if ss & ts:
        raise PreconditionError("S and T must be disjoint")
    return kernels.tutte_delta(g.adjacency_masks(), _masks(g, ss), _masks(g, ts))


def _gadget(g: Graph):
    """Degree-constraint gadget whose perfect matchings are the 2-factors."""
    stub: dict[tuple[int, int], int] = {}
    nodes = 0
    for u, v in g.edges():
        stub[(u, v)] = nodes
        stub[(v, u)] = nodes + 1
        nodes += 2
    adj: list[list[int]] = [[] for _ in range(nodes)]
    for u, v in g.edges():
        a, b = stub[(u, v)], stub[(v, u)]
        adj[a].append(b)
        adj[b].append(a)
    for v in range(g.n):
        d = g.degree(v)
        cores = list(range(nodes, nodes + d - 2))
        nodes += d - 2
        adj.extend([] for _ in cores)
        for u in g.adj[v]:
            s = stub[(v, u)]
            for c in cores:
                adj[s].append(c)
                adj[c].append(s)
    for lst in adj:
        lst.sort()
    return nodes, adj, stub


def has_two_factor(
    g: Graph, guard: int = DEFAULT_SCAN_GUARD
) -> tuple[bool, Union[TwoFactor, BarrierPair]]:
    """Decide existence; certificate is a verified 2-factor or a barrier.

    The decision comes from the matching gadget.  For negative instances
    the certifying barrier is recovered by the exhaustive scan, so ``guard``
    caps the graph size on that side only.
    """
    tf = _extract_via_gadget(g)
    if tf is not None:
        return True, tf
    barrier = _scan_biased_barrier(g, guard)
    if barrier is None:
        raise ViolationError("gadget says no 2-factor but no barrier exists")
    return False, barrier


def _extract_via_gadget(g: Graph) -> Optional[TwoFactor]:
    if g.n == 0:
        return TwoFactor(frozenset())
    if any(g.degree(v) < 2 for v in range(g.n)):
        return None
    nodes, adj, stub = _gadget(g)
    mate = kernels.blossom_matching(nodes, adj)
    if any(m == -1 for m in mate):
        return None
    chosen = set()
    for u, v in g.edges():
        if mate[stub[(u, v)]] == stub[(v, u)]:
            chosen.add((u, v))
    tf = TwoFactor(frozenset(chosen))
    if not tf.is_valid(g):
        raise ViolationError("gadget matching did not produce a 2-regular subgraph")
    return tf


def extract_two_factor(g: Graph) -> TwoFactor:
    tf = _extract_via_gadget(g)
    if tf is None:
        raise ViolationError("graph has no 2-factor")
    return tf


def _scan_biased_barrier(g: Graph, guard: int) -> Optional[BarrierPair]:
    if g.n > guard:
        raise CapacityError(f"barrier scan needs 3^{g.n} pairs; guard is {guard}")
    hit = kernels.best_biased_barrier(g.adjacency_masks())
    if hit is None:
        return None
    s_mask, t_mask, delta = hit
    return BarrierPair(_unmask(s_mask, g.n), _unmask(t_mask, g.n), delta)


def find_all_barriers(
    g: Graph, limit: Optional[int] = None, guard: int = DEFAULT_SCAN_GUARD
) -> list[BarrierPair]:
    """All disjoint pairs with delta <= -2 (possibly truncated at ``limit``)."""
    if g.n > guard:
        raise CapacityError(f"barrier enumeration needs 3^{g.n} pairs; guard is {guard}")
    cap = limit if limit is not None else 1 << 62
    raw = kernels.collect_barriers(g.adjacency_masks(), cap)
    out = [
        BarrierPair(_unmask(s, g.n), _unmask(t, g.n), d) for s, t, d in raw
    ]
    out.sort(key=lambda b: (len(b.t), sorted(b.t), len(b.s), sorted(b.s)))
    return out


def biased_barrier(g: Graph, guard: int = DEFAULT_SCAN_GUARD) -> BarrierPair:
    """Barrier with minimum |T|, then maximum |S|, then lexicographic ties."""
    b = _scan_biased_barrier(g, guard)
    if b is None:
        raise ViolationError("graph has a 2-factor; no barrier exists")
    return b


# ---------------------------------------------------------------------------
# component classification around a pair (S, T)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentClassification:
    """Everything the barrier machinery needs to know about G - (S u T)."""

    s: frozenset[int]
    t: frozenset[int]
    odd_by_links: dict[int, list[frozenset[int]]]
    even_components: list[frozenset[int]]
    u_vertices: frozenset[int]
    u_by_links: dict[int, frozenset[int]]
    single_link_counts: dict[int, int]  # per T-vertex: components hit exactly once
    multi_link_counts: dict[int, int]  # same, restricted to components with >= 3 links
    t_isolated: frozenset[int]
    t_single: frozenset[int]
    t_multi: frozenset[int]
    t_multi_excess: int
    t_size_residual: int
    t_multi_size_residual: Fraction
    tight_by_links: dict[int, list[frozenset[int]]]  # |V(D)| == links
    slack_by_links: dict[int, list[frozenset[int]]]

    @property
    def odd_component_count(self) -> int:
        return sum(len(v) for v in self.odd_by_links.values())

    def odd_components(self) -> list[frozenset[int]]:
        out = []
        for links in sorted(self.odd_by_links):
            out.extend(self.odd_by_links[links])
        return out

    def link_count_of(self, comp: frozenset[int]) -> int:
        for links, comps in self.odd_by_links.items():
            if comp in comps:
                return links
        raise KeyError("not an odd component")


def classify_components(g: Graph, s: Iterable[int], t: Iterable[int]) -> ComponentClassification:
    ss, ts = frozenset(s), frozenset(t)
    if ss & ts:
        raise PreconditionError("S and T must be disjoint")
    comps = sorted(g.components(removed=ss | ts), key=min)
    odd_by_links: dict[int, list[frozenset[int]]] = {}
    even_components: list[frozenset[int]] = []
    for comp in comps:
        links = edge_boundary(g, comp, ts)
        if links % 2 == 1:
            odd_by_links.setdefault(links, []).append(comp)
        else:
            even_components.append(comp)

    u_vertices = frozenset(v for comp in comps for v in comp)
    u_by_links = {
        links: frozenset(v for comp in comps_ for v in comp)
        for links, comps_ in odd_by_links.items()
    }

    odd_all = [c for lst in odd_by_links.values() for c in lst]
    big_odd = [
        c
        for links, lst in odd_by_links.items()
        if links >= 3
        for c in lst
    ]
    single_link_counts = {}
    multi_link_counts = {}
    for y in sorted(ts):
        nbrs = g.adj[y]
        single_link_counts[y] = sum(1 for comp in odd_all if len(nbrs & comp) == 1)
        multi_link_counts[y] = sum(1 for comp in big_odd if len(nbrs & comp) == 1)

    t_isolated = frozenset(y for y in ts if multi_link_counts[y] == 0)
    t_single = frozenset(y for y in ts if multi_link_counts[y] == 1)
    t_multi = ts - t_isolated - t_single
    t_multi_excess = sum(multi_link_counts[y] - 2 for y in t_multi)

    link_sum = sum(links * len(lst) for links, lst in odd_by_links.items() if links >= 3)
    weighted = sum(
        (links - 1) // 2 * len(lst) for links, lst in odd_by_links.items()
    )
    t_size_residual = len(ts) - (len(ss) + weighted + 1)
    t_multi_size_residual = Fraction(len(t_multi)) - Fraction(
        link_sum - len(t_single) - t_multi_excess, 2
    )

    tight_by_links: dict[int, list[frozenset[int]]] = {}
    slack_by_links: dict[int, list[frozenset[int]]] = {}
    for links, lst in odd_by_links.items():
        if links < 5:
            continue
        for comp in lst:
            target = tight_by_links if len(comp) == links else slack_by_links
            target.setdefault(links, []).append(comp)

    return ComponentClassification(
        s=ss,
        t=ts,
        odd_by_links=odd_by_links,
        even_components=even_components,
        u_vertices=u_vertices,
        u_by_links=u_by_links,
        single_link_counts=single_link_counts,
        multi_link_counts=multi_link_counts,
        t_isolated=t_isolated,
        t_single=t_single,
        t_multi=t_multi,
        t_multi_excess=t_multi_excess,
        t_size_residual=t_size_residual,
        t_multi_size_residual=t_multi_size_residual,
        tight_by_links=tight_by_links,
        slack_by_links=slack_by_links,
    )


@dataclass(frozen=True)
class BiasedBarrierReport:
    """Pass/fail of the structural properties a biased barrier must satisfy."""

    t_independent: bool
    even_components_detached: bool
    odd_single_link_per_t: bool
    odd_single_link_per_vertex: bool
    delta_is_minus_two: bool
    t_size_residual: int
    t_multi_size_residual: Fraction

    def all_hold(self) -> bool:
        return (
            self.t_independent
            and self.even_components_detached
            and self.odd_single_link_per_t
            and self.odd_single_link_per_vertex
            and self.t_size_residual == 0
            and self.t_multi_size_residual == 0
        )


def check_biased_properties(g: Graph, b: BarrierPair) -> BiasedBarrierReport:
    """Verify independence/link-multiplicity properties and the counting
    identities on a claimed biased barrier.  A report, never an assertion."""
    cls = classify_components(g, b.s, b.t)
    t_independent = all(
        not (g.adj[y] & b.t) for y in b.t
    )
    even_ok = all(
        edge_boundary(g, comp, b.t) == 0 for comp in cls.even_components
    )
    odd_per_t = True
    odd_per_vertex = True
    for comp in cls.odd_components():
        for y in b.t:
            if edge_boundary(g, [y], comp) > 1:
                odd_per_t = False
        for x in comp:
            if len(g.adj[x] & b.t) > 1:
                odd_per_vertex = False
    return BiasedBarrierReport(
        t_independent=t_independent,
        even_components_detached=even_ok,
        odd_single_link_per_t=odd_per_t,
        odd_single_link_per_vertex=odd_per_vertex,
        delta_is_minus_two=(b.delta == -2),
        t_size_residual=cls.t_size_residual,
        t_multi_size_residual=cls.t_multi_size_residual,
    )


# ---------------------------------------------------------------------------
# Hamiltonian cycles (exploratory reporting)
# ---------------------------------------------------------------------------

def is_hamiltonian(g: Graph, guard: int = 20) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Backtracking Hamiltonian-cycle search with a size guard."""
    n = g.n
    if n > guard:
        raise CapacityError(f"hamiltonian search guarded at n <= {guard}")
    if n < 3 or not g.is_connected():
        return False, None
    if any(g.degree(v) < 2 for v in range(n)):
        return False, None
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    order = [sorted(g.adj[v]) for v in range(n)]
    path = [0]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return g.has_edge(v, 0)
        rem = full & ~visited
        m = rem
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            avail = masks[w] & (rem | (1 << v) | 1)
            need = 2
            if rem == 1 << w:
                # last vertex must link the current end to the start
                if masks[w] & (1 << v) and masks[w] & 1:
                    pass
                else:
                    return False
            elif avail.bit_count() < need:
                return False
        for u in order[v]:
            if visited >> u & 1:
                continue
            path.append(u)
            if extend(u, visited | 1 << u):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return True, tuple(path)
    return False, None

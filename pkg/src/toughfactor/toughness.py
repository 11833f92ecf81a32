"""Exact toughness, t-tough decisions, and vertex connectivity.

All ratio arithmetic is exact: values are ``fractions.Fraction`` with
``math.inf`` as the sentinel for complete graphs.  No floating point
comparisons occur anywhere in the search.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import kernels
from .graph import Graph
from .errors import PreconditionError

INFINITY = math.inf

ExactRational = Fraction  # reduced-form rational with positive denominator


@dataclass(frozen=True)
class ToughnessResult:
    """Exact toughness with a witness cutset (absent for complete graphs)."""

    value: Union[Fraction, float]
    witness: Optional[frozenset[int]]


def toughness(g: Graph) -> ToughnessResult:
    """min |S|/c(G-S) over cutsets with c(G-S) >= 2; infinity when complete."""
    if g.is_complete():
        return ToughnessResult(INFINITY, None)
    scan = kernels.toughness_scan(g.adjacency_masks())
    if scan is None:
        # noncomplete graphs on < 2 vertices cannot occur; n=2 without the
        # edge is disconnected and handled by the scan (S = empty set)
        return ToughnessResult(INFINITY, None)
    num, den, mask = scan
    witness = frozenset(v for v in range(g.n) if mask >> v & 1)
    return ToughnessResult(Fraction(num, den), witness)


def is_t_tough(g: Graph, t: Union[Fraction, int]) -> tuple[bool, Optional[frozenset[int]]]:
    """Decide tau(g) >= t; on failure also return a cutset with |S| < t*c(G-S)."""
    res = toughness(g)
    if res.value == INFINITY or res.value >= t:
        return True, None
    return False, res.witness


def _min_vertex_cut_size(g: Graph, s: int, t: int) -> int:
    # Unit-capacity max flow on the vertex-split digraph; s and t nonadjacent.
    # Node 2v is the entry copy of v, node 2v+1 the exit copy.
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[set[int]] = [set() for _ in range(2 * n)]

    def arc(a: int, b: int, c: int):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        nbrs[a].add(b)
        nbrs[b].add(a)

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
    for u in range(n):
        for v in g.adj[u]:
            arc(2 * u + 1, 2 * v, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent: dict[int, Optional[int]] = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in parent and cap[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            return flow
        x = sink
        while parent[x] is not None:
            p = parent[x]
            cap[(p, x)] -= 1
            cap[(x, p)] += 1
            x = p
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum cutset size; n - 1 for complete graphs."""
    if g.n == 0:
        raise PreconditionError("connectivity of the empty graph is undefined")
    if g.is_complete():
        return g.n - 1
    if not g.is_connected():
        return 0
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, _min_vertex_cut_size(g, u, v))
    return best

"""Pure-Python hot kernels.

Same function surface as the compiled extension ``_fastkernels``; selected
as fallback at import time by :mod:`toughfactor.kernels`.  Graphs enter as
adjacency bitmasks (arbitrary-size Python ints, so there is no vertex-count
cap here) or, for the matching kernel, as adjacency lists.
"""

from __future__ import annotations

from collections import deque


def _lex_less(a: int, b: int) -> bool:
    # Lexicographic order on sorted vertex tuples: the mask holding the
    # lowest differing bit is the smaller set.
    d = a ^ b
    if d == 0:
        return False
    return a & (d & -d) != 0


def _iter_bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _component_masks(adj, rest):
    comps = []
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= adj[v] & rest
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _odd_link_component_count(adj, rest, t_mask):
    c = 0
    while rest:
        comp = rest & -rest
        frontier = comp
        links = 0
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= adj[v] & rest
                links += (adj[v] & t_mask).bit_count()
            frontier = nxt & ~comp
            comp |= frontier
        if links & 1:
            c += 1
        rest &= ~comp
    return c


def tutte_delta(adj, s_mask, t_mask):
    """delta = 2|S| + sum_{y in T} deg_{G-S}(y) - 2|T| - (# odd components)."""
    not_s = ~s_mask
    deg_sum = 0
    for v in _iter_bits(t_mask):
        deg_sum += (adj[v] & not_s).bit_count()
    full = (1 << len(adj)) - 1
    rest = full & ~s_mask & ~t_mask
    c = _odd_link_component_count(adj, rest, t_mask)
    return 2 * s_mask.bit_count() + deg_sum - 2 * t_mask.bit_count() - c


def min_tutte_delta(adj):
    """Minimum delta over all disjoint (S, T); ties prefer small/lex T then S."""
    n = len(adj)
    full = (1 << n) - 1
    best = (0, 0, 0)  # (S,T) = (empty, empty) has delta 0
    best_d = 0
    for s in range(full + 1):
        rest0 = full & ~s
        t = rest0
        while True:
            if t:
                d = tutte_delta(adj, s, t)
                if d < best_d or (
                    d == best_d
                    and (
                        t.bit_count() < best[2].bit_count()
                        or (
                            t.bit_count() == best[2].bit_count()
                            and (
                                _lex_less(t, best[2])
                                or (t == best[2] and _lex_less(s, best[1]))
                            )
                        )
                    )
                ):
                    best_d = d
                    best = (d, s, t)
            if t == 0:
                break
            t = (t - 1) & rest0
    return best_d, best[1], best[2]


def best_biased_barrier(adj):
    """Barrier minimizing |T|, then maximizing |S|, then lex T, then lex S.

    Returns ``(s_mask, t_mask, delta)`` or None when no barrier exists.
    """
    n = len(adj)
    full = (1 << n) - 1
    best = None
    best_key = None
    for s in range(full + 1):
        rest0 = full & ~s
        t = rest0
        while True:
            if t:
                tc = t.bit_count()
                if best_key is None or tc <= best_key[0]:
                    d = tutte_delta(adj, s, t)
                    if d <= -2:
                        key = (tc, -s.bit_count())
                        if (
                            best_key is None
                            or key < best_key
                            or (
                                key == best_key
                                and (
                                    _lex_less(t, best[1])
                                    or (t == best[1] and _lex_less(s, best[0]))
                                )
                            )
                        ):
                            best_key = key
                            best = (s, t, d)
            if t == 0:
                break
            t = (t - 1) & rest0
    return best


def collect_barriers(adj, cap):
    """All disjoint pairs with delta <= -2, in scan order, at most ``cap``."""
    n = len(adj)
    full = (1 << n) - 1
    out = []
    for s in range(full + 1):
        rest0 = full & ~s
        t = rest0
        while True:
            if t:
                d = tutte_delta(adj, s, t)
                if d <= -2:
                    out.append((s, t, d))
                    if len(out) >= cap:
                        return out
            if t == 0:
                break
            t = (t - 1) & rest0
    return out


def toughness_scan(adj):
    """Exact toughness by cutset enumeration.

    Returns ``(num, den, s_mask)`` minimizing |S|/c(G-S) over cutsets with
    c >= 2, or None when no such cutset exists (complete graphs).  Ties on
    the ratio prefer the lexicographically smallest S.
    """
    n = len(adj)
    full = (1 << n) - 1
    bn = bd = 0
    bmask = 0
    found = False
    for s in range(full):
        k = s.bit_count()
        if k > n - 2:
            continue
        # best possible ratio at this size is k/(n-k); prune when it cannot win
        if found and k * bd > bn * (n - k):
            continue
        rest = full & ~s
        c = len(_component_masks(adj, rest))
        if c < 2:
            continue
        if not found or k * bd < bn * c or (k * bd == bn * c and _lex_less(s, bmask)):
            bn, bd, bmask = k, c, s
            found = True
    if not found:
        return None
    return bn, bd, bmask


def deficiency_scan(adj):
    """max over X of (odd-order components of G-X) - |X|.

    Returns ``(df, x_mask)`` where the witness has maximum cardinality among
    attaining sets (hence is inclusion-maximal), lex-smallest on ties.
    """
    n = len(adj)
    full = (1 << n) - 1
    best_d = None
    best_x = 0
    for x in range(full + 1):
        odd = 0
        for comp in _component_masks(adj, full & ~x):
            if comp.bit_count() & 1:
                odd += 1
        d = odd - x.bit_count()
        if (
            best_d is None
            or d > best_d
            or (
                d == best_d
                and (
                    x.bit_count() > best_x.bit_count()
                    or (x.bit_count() == best_x.bit_count() and _lex_less(x, best_x))
                )
            )
        ):
            best_d = d
            best_x = x
    return best_d, best_x


def blossom_matching(n, adj):
    """Maximum cardinality matching in a general graph (blossom contraction).

    ``adj`` is a list of neighbor lists.  Returns the mate array with -1 for
    exposed vertices.
    """
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v, b, child, in_blossom):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root):
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return match

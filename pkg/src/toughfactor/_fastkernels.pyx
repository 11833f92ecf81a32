# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: bitmask delta/toughness/deficiency scans and the
blossom matching.  Mirrors ``_purekernels`` function by function, including
tie-breaking, so the two backends are interchangeable.  Masks are uint64,
so callers cap n at 62 (the dispatcher in ``kernels`` enforces this)."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef inline u64 _lowbit(u64 x) nogil:
    return x & (~x + 1)


cdef inline bint _lex_less(u64 a, u64 b) nogil:
    cdef u64 d = a ^ b
    if d == 0:
        return False
    return (a & _lowbit(d)) != 0


cdef int _odd_link_components(u64 *adj, u64 rest, u64 t_mask) nogil:
    cdef int c = 0
    cdef int links, v
    cdef u64 comp, frontier, nxt, f
    while rest:
        comp = _lowbit(rest)
        frontier = comp
        links = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = __builtin_ctzll(f)
                f &= f - 1
                nxt |= adj[v] & rest
                links += __builtin_popcountll(adj[v] & t_mask)
            frontier = nxt & ~comp
            comp |= frontier
        if links & 1:
            c += 1
        rest &= ~comp
    return c


cdef int _component_count(u64 *adj, u64 rest) nogil:
    cdef int c = 0
    cdef int v
    cdef u64 comp, frontier, nxt, f
    while rest:
        comp = _lowbit(rest)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = __builtin_ctzll(f)
                f &= f - 1
                nxt |= adj[v] & rest
            frontier = nxt & ~comp
            comp |= frontier
        c += 1
        rest &= ~comp
    return c


cdef int _odd_order_components(u64 *adj, u64 rest) nogil:
    cdef int c = 0
    cdef int v
    cdef u64 comp, frontier, nxt, f
    while rest:
        comp = _lowbit(rest)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = __builtin_ctzll(f)
                f &= f - 1
                nxt |= adj[v] & rest
            frontier = nxt & ~comp
            comp |= frontier
        if __builtin_popcountll(comp) & 1:
            c += 1
        rest &= ~comp
    return c


cdef u64 *_load_masks(object adj_masks, int *out_n) except NULL:
    cdef int n = len(adj_masks)
    cdef u64 *adj = <u64 *> malloc(n * sizeof(u64)) if n else <u64 *> malloc(sizeof(u64))
    if adj == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        adj[i] = <u64> adj_masks[i]
    out_n[0] = n
    return adj


cdef long _delta(u64 *adj, int n, u64 s, u64 t) nogil:
    cdef long deg_sum = 0
    cdef u64 f = t, full = (<u64> 1 << n) - 1
    cdef int v
    while f:
        v = __builtin_ctzll(f)
        f &= f - 1
        deg_sum += __builtin_popcountll(adj[v] & ~s)
    cdef u64 rest = full & ~s & ~t
    cdef int c = _odd_link_components(adj, rest, t)
    return (
        2 * <long> __builtin_popcountll(s)
        + deg_sum
        - 2 * <long> __builtin_popcountll(t)
        - c
    )


def tutte_delta(adj_masks, s_mask, t_mask):
    cdef int n
    cdef u64 *adj = _load_masks(adj_masks, &n)
    try:
        return _delta(adj, n, <u64> s_mask, <u64> t_mask)
    finally:
        free(adj)


def min_tutte_delta(adj_masks):
    """Minimum delta over all disjoint (S, T); ties prefer small/lex T then S."""
    cdef int n
    cdef u64 *adj = _load_masks(adj_masks, &n)
    cdef u64 full = (<u64> 1 << n) - 1
    cdef u64 s, t, rest0, best_s = 0, best_t = 0
    cdef long d, best_d = 0
    cdef bint better
    try:
        with nogil:
            s = 0
            while True:
                rest0 = full & ~s
                t = rest0
                while True:
                    if t:
                        d = _delta(adj, n, s, t)
                        better = False
                        if d < best_d:
                            better = True
                        elif d == best_d:
                            if __builtin_popcountll(t) < __builtin_popcountll(best_t):
                                better = True
                            elif __builtin_popcountll(t) == __builtin_popcountll(best_t):
                                if _lex_less(t, best_t):
                                    better = True
                                elif t == best_t and _lex_less(s, best_s):
                                    better = True
                        if better:
                            best_d = d
                            best_s = s
                            best_t = t
                    if t == 0:
                        break
                    t = (t - 1) & rest0
                if s == full:
                    break
                s += 1
        return best_d, best_s, best_t
    finally:
        free(adj)


def best_biased_barrier(adj_masks):
    """Barrier minimizing |T|, then maximizing |S|, then lex T, then lex S."""
    cdef int n
    cdef u64 *adj = _load_masks(adj_masks, &n)
    cdef u64 full = (<u64> 1 << n) - 1
    cdef u64 s, t, rest0, best_s = 0, best_t = 0
    cdef long d, best_d = 0
    cdef int best_tc = -1, best_sc = -1, tc, sc
    cdef bint better, found = False
    try:
        with nogil:
            s = 0
            while True:
                rest0 = full & ~s
                t = rest0
                while True:
                    if t:
                        tc = __builtin_popcountll(t)
                        if best_tc < 0 or tc <= best_tc:
                            d = _delta(adj, n, s, t)
                            if d <= -2:
                                sc = __builtin_popcountll(s)
                                better = False
                                if best_tc < 0:
                                    better = True
                                elif tc < best_tc:
                                    better = True
                                elif tc == best_tc:
                                    if sc > best_sc:
                                        better = True
                                    elif sc == best_sc:
                                        if _lex_less(t, best_t):
                                            better = True
                                        elif t == best_t and _lex_less(s, best_s):
                                            better = True
                                if better:
                                    found = True
                                    best_tc = tc
                                    best_sc = sc
                                    best_t = t
                                    best_s = s
                                    best_d = d
                    if t == 0:
                        break
                    t = (t - 1) & rest0
                if s == full:
                    break
                s += 1
        if not found:
            return None
        return best_s, best_t, best_d
    finally:
        free(adj)


def collect_barriers(adj_masks, cap):
    """All disjoint pairs with delta <= -2, in scan order, at most ``cap``."""
    cdef int n
    cdef u64 *adj = _load_masks(adj_masks, &n)
    cdef u64 full = (<u64> 1 << n) - 1
    cdef u64 s, t, rest0
    cdef long d
    cdef Py_ssize_t limit = cap
    out = []
    try:
        s = 0
        while True:
            rest0 = full & ~s
            t = rest0
            while True:
                if t:
                    d = _delta(adj, n, s, t)
                    if d <= -2:
                        out.append((s, t, d))
                        if len(out) >= limit:
                            return out
                if t == 0:
                    break
                t = (t - 1) & rest0
            if s == full:
                break
            s += 1
        return out
    finally:
        free(adj)


def toughness_scan(adj_masks):
    """Exact toughness by cutset enumeration (None for complete graphs)."""
    cdef int n
    cdef u64 *adj = _load_masks(adj_masks, &n)
    cdef u64 full = (<u64> 1 << n) - 1
    cdef u64 s, bmask = 0
    cdef long bn = 0, bd = 0
    cdef int k, c
    cdef bint found = False
    try:
        with nogil:
            s = 0
            while s < full:
                k = __builtin_popcountll(s)
                if k <= n - 2:
                    if not (found and k * bd > bn * (n - k)):
                        c = _component_count(adj, full & ~s)
                        if c >= 2:
                            if (
                                not found
                                or k * bd < bn * c
                                or (k * bd == bn * c and _lex_less(s, bmask))
                            ):
                                bn = k
                                bd = c
                                bmask = s
                                found = True
                s += 1
        if not found:
            return None
        return bn, bd, bmask
    finally:
        free(adj)


def deficiency_scan(adj_masks):
    """max over X of odd-order components of G-X minus |X| (max-card witness)."""
    cdef int n
    cdef u64 *adj = _load_masks(adj_masks, &n)
    cdef u64 full = (<u64> 1 << n) - 1
    cdef u64 x, best_x = 0
    cdef long d, best_d
    cdef bint better, first = True
    try:
        with nogil:
            best_d = 0
            x = 0
            while True:
                d = _odd_order_components(adj, full & ~x) - __builtin_popcountll(x)
                better = False
                if first:
                    better = True
                    first = False
                elif d > best_d:
                    better = True
                elif d == best_d:
                    if __builtin_popcountll(x) > __builtin_popcountll(best_x):
                        better = True
                    elif __builtin_popcountll(x) == __builtin_popcountll(best_x) and _lex_less(x, best_x):
                        better = True
                if better:
                    best_d = d
                    best_x = x
                if x == full:
                    break
                x += 1
        return best_d, best_x
    finally:
        free(adj)


def blossom_matching(n, adj):
    """Maximum cardinality matching (blossom contraction), mate array out."""
    cdef int nn = n
    if nn == 0:
        return []
    cdef Py_ssize_t total = 0
    cdef int i, j
    for i in range(nn):
        total += len(adj[i])
    cdef int *indptr = <int *> malloc((nn + 1) * sizeof(int))
    cdef int *nbr = <int *> malloc(total * sizeof(int) if total else sizeof(int))
    cdef int *match = <int *> malloc(nn * sizeof(int))
    cdef int *p = <int *> malloc(nn * sizeof(int))
    cdef int *base = <int *> malloc(nn * sizeof(int))
    cdef char *used = <char *> malloc(nn)
    cdef char *seen = <char *> malloc(nn)
    cdef char *in_blossom = <char *> malloc(nn)
    cdef int *queue = <int *> malloc(nn * sizeof(int))
    if (
        indptr == NULL or nbr == NULL or match == NULL or p == NULL
        or base == NULL or used == NULL or seen == NULL or in_blossom == NULL
        or queue == NULL
    ):
        free(indptr); free(nbr); free(match); free(p); free(base)
        free(used); free(seen); free(in_blossom); free(queue)
        raise MemoryError()
    cdef Py_ssize_t pos = 0
    indptr[0] = 0
    for i in range(nn):
        for j in adj[i]:
            nbr[pos] = j
            pos += 1
        indptr[i + 1] = <int> pos
    cdef int v
    try:
        with nogil:
            for v in range(nn):
                match[v] = -1
            for v in range(nn):
                if match[v] == -1:
                    _find_path(nn, indptr, nbr, match, p, base, used, seen, in_blossom, queue, v)
        return [match[i] for i in range(nn)]
    finally:
        free(indptr); free(nbr); free(match); free(p); free(base)
        free(used); free(seen); free(in_blossom); free(queue)


cdef int _lca(int n, int *match, int *p, int *base, char *seen, int a, int b) nogil:
    memset(seen, 0, n)
    while True:
        a = base[a]
        seen[a] = 1
        if match[a] == -1:
            break
        a = p[match[a]]
    while True:
        b = base[b]
        if seen[b]:
            return b
        b = p[match[b]]


cdef void _mark_path(int *match, int *p, int *base, char *in_blossom, int v, int b, int child) nogil:
    while base[v] != b:
        in_blossom[base[v]] = 1
        in_blossom[base[match[v]]] = 1
        p[v] = child
        child = match[v]
        v = p[match[v]]


cdef bint _find_path(
    int n, int *indptr, int *nbr, int *match, int *p, int *base,
    char *used, char *seen, char *in_blossom, int *queue, int root
) nogil:
    cdef int i, v, to, cur, head, tail, u, pv, ppv
    for i in range(n):
        used[i] = 0
        p[i] = -1
        base[i] = i
    used[root] = 1
    head = 0
    tail = 0
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for i in range(indptr[v], indptr[v + 1]):
            to = nbr[i]
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                cur = _lca(n, match, p, base, seen, v, to)
                memset(in_blossom, 0, n)
                _mark_path(match, p, base, in_blossom, v, cur, to)
                _mark_path(match, p, base, in_blossom, to, cur, v)
                for u in range(n):
                    if in_blossom[base[u]]:
                        base[u] = cur
                        if not used[u]:
                            used[u] = 1
                            queue[tail] = u
                            tail += 1
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
                used[match[to]] = 1
                queue[tail] = match[to]
                tail += 1
    return False

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from toughfactor import (
    Graph,
    biased_barrier,
    check_biased_properties,
    classify_components,
    extract_two_factor,
    find_all_barriers,
    has_two_factor,
    is_hamiltonian,
    tutte_delta,
)
from toughfactor.errors import CapacityError, PreconditionError, ViolationError
from toughfactor.generators import (
    connected_graph_catalog,
    cycle_graph,
    octahedron,
    petersen_graph,
    star_graph,
    theta_graph,
)


def test_delta_empty_pair(k4):
    assert tutte_delta(k4, [], []) == 0


def test_delta_star_center(k13):
    assert tutte_delta(k13, [], [0]) == -2


def test_delta_k23_three_side(k23):
    assert tutte_delta(k23, [], [2, 3, 4]) == -2


def test_delta_requires_disjoint(k4):
    with pytest.raises(PreconditionError):
        tutte_delta(k4, [0], [0, 1])


def test_delta_matches_oracle_and_parity():
    rng = random.Random(79)
    for _ in range(200):
        n = rng.randrange(1, 8)
        g = oracles.random_graph(rng, n, 0.5)
        verts = list(range(n))
        rng.shuffle(verts)
        k = rng.randrange(0, n + 1)
        s = set(verts[:k])
        t = set(verts[k : k + rng.randrange(0, n - k + 1)])
        d = tutte_delta(g, s, t)
        assert d == oracles.brute_delta(g, s, t)
        assert d % 2 == 0


def test_has_two_factor_cycle():
    ok, cert = has_two_factor(cycle_graph(5))
    assert ok
    assert cert.is_valid(cycle_graph(5))


def test_has_two_factor_star(k13):
    ok, cert = has_two_factor(k13)
    assert not ok
    assert cert.delta <= -2
    assert cert.s == frozenset() and cert.t == {0}


def test_has_two_factor_k4(k4):
    ok, cert = has_two_factor(k4)
    assert ok and cert.is_valid(k4)


def test_extract_two_factor_octahedron():
    g, _ = octahedron()
    tf = extract_two_factor(g)
    assert oracles.is_two_factor_edges(g, tf.edges)


def test_extract_two_factor_c6():
    g = cycle_graph(6)
    tf = extract_two_factor(g)
    assert frozenset((min(u, v), max(u, v)) for u, v in tf.edges) == frozenset(
        (min(u, v), max(u, v)) for u, v in g.edges()
    )


def test_extract_two_factor_violation(k13):
    with pytest.raises(ViolationError):
        extract_two_factor(k13)


def test_gadget_agrees_with_exhaustive_delta_small_catalog():
    for n in range(4, 7):
        for g in connected_graph_catalog(n):
            assert has_two_factor(g)[0] == (oracles.brute_min_delta(g) >= 0)


def test_find_all_barriers_examples(k13, k23):
    assert find_all_barriers(cycle_graph(5)) == []
    star_barriers = find_all_barriers(k13)
    assert any(b.s == frozenset() and b.t == {0} for b in star_barriers)
    k23_barriers = find_all_barriers(k23)
    assert any(b.s == frozenset() and b.t == {2, 3, 4} for b in k23_barriers)


def test_find_all_barriers_guard():
    g = Graph.from_edges(19, [(i, i + 1) for i in range(18)])
    with pytest.raises(CapacityError):
        find_all_barriers(g)


def test_biased_barrier_star(k13):
    b = biased_barrier(k13)
    assert b.s == frozenset() and b.t == {0}
    cls = classify_components(k13, b.s, b.t)
    assert cls.t_size_residual == 0


def test_biased_barrier_minimizes_t_then_maximizes_s(k23):
    b = biased_barrier(k23)
    barriers = find_all_barriers(k23)
    min_t = min(len(x.t) for x in barriers)
    assert len(b.t) == min_t
    max_s = max(len(x.s) for x in barriers if len(x.t) == min_t)
    assert len(b.s) == max_s


def test_biased_barrier_two_bridged_stars():
    # centers 0 and 4; leaves 1,2,3 and 5,6,7; bridge between leaves 3 and 5.
    # ({}, {0}) is already a barrier (delta = 3 - 2 - 3 = -2), so the biased
    # barrier has |T| = 1, not the two centers.
    g = Graph.from_edges(
        8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (3, 5)]
    )
    assert tutte_delta(g, set(), {0, 4}) == -2  # the two centers do barrier...
    b = biased_barrier(g)
    assert b.t == {0}  # ...but a single center is smaller
    rep = check_biased_properties(g, b)
    assert rep.all_hold() and rep.delta_is_minus_two


def test_biased_barrier_requires_no_two_factor(k4):
    with pytest.raises(ViolationError):
        biased_barrier(k4)


def test_biased_properties_star(k13):
    b = biased_barrier(k13)
    rep = check_biased_properties(k13, b)
    assert rep.all_hold()
    assert rep.t_size_residual == 0
    assert rep.t_multi_size_residual == 0


def test_biased_properties_corrupted_pair(two_triangles):
    from toughfactor import BarrierPair

    # adjacent vertices inside T: property 1 must fail
    fake = BarrierPair(frozenset(), frozenset({0, 1}), -2)
    rep = check_biased_properties(two_triangles, fake)
    assert not rep.t_independent


def test_biased_properties_k23(k23):
    b = biased_barrier(k23)
    rep = check_biased_properties(k23, b)
    assert rep.all_hold()


def test_biased_barrier_delta_minus_two_and_minimality_suite():
    cases = [star_graph(3), star_graph(5), theta_graph(2, 2, 2), theta_graph(1, 3, 3)]
    rng = random.Random(83)
    # random trees never have a 2-factor
    for _ in range(20):
        n = rng.randrange(4, 10)
        edges = [(i, rng.randrange(0, i)) for i in range(1, n)]
        cases.append(Graph.from_edges(n, edges))
    for g in cases:
        ok, _ = has_two_factor(g)
        assert not ok
        b = biased_barrier(g)
        assert b.delta == -2
        rep = check_biased_properties(g, b)
        assert rep.all_hold()
        # removing any single T-vertex kills the barrier (minimality)
        for y in b.t:
            assert tutte_delta(g, b.s, b.t - {y}) >= 0


def test_classification_star(k13):
    cls = classify_components(k13, frozenset(), frozenset({0}))
    assert {k: len(v) for k, v in cls.odd_by_links.items()} == {1: 3}
    assert cls.t_isolated == {0}
    assert cls.t_multi_excess == 0


def test_classification_empty_pair(two_triangles):
    cls = classify_components(two_triangles, frozenset(), frozenset())
    assert cls.odd_by_links == {}
    assert len(cls.even_components) == 1


def test_classification_two_triangles(two_triangles):
    cls = classify_components(two_triangles, frozenset(), frozenset({6, 7, 8}))
    assert {k: len(v) for k, v in cls.odd_by_links.items()} == {3: 2}
    assert cls.t_multi == {6, 7, 8}
    assert cls.t_isolated == frozenset() and cls.t_single == frozenset()
    assert cls.t_multi_excess == 0
    assert cls.t_size_residual == 0
    assert cls.t_multi_size_residual == 0


def test_classification_u_sets(two_triangles):
    cls = classify_components(two_triangles, frozenset(), frozenset({6, 7, 8}))
    assert cls.u_vertices == frozenset(range(6))
    assert cls.u_by_links[3] == frozenset(range(6))


def test_hamiltonian_examples(k13):
    ok, cycle = is_hamiltonian(cycle_graph(7))
    assert ok and len(cycle) == 7
    assert is_hamiltonian(k13)[0] is False
    assert is_hamiltonian(petersen_graph())[0] is False


def test_hamiltonian_guard():
    g = cycle_graph(25)
    with pytest.raises(CapacityError):
        is_hamiltonian(g, guard=20)


def test_hamiltonian_matches_bruteforce():
    rng = random.Random(89)
    for _ in range(60):
        g = oracles.random_graph(rng, rng.randrange(3, 8), rng.choice([0.3, 0.5, 0.7]))
        got, cycle = is_hamiltonian(g)
        assert got == oracles.brute_hamiltonian(g)
        if got:
            n = g.n
            assert len(cycle) == n
            assert all(
                g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)
            )


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**31), st.integers(4, 9))
def test_certificates_always_verify(seed, n):
    rng = random.Random(seed)
    g = oracles.random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
    ok, cert = has_two_factor(g)
    if ok:
        assert oracles.is_two_factor_edges(g, cert.edges)
    else:
        assert cert.delta <= -2 and cert.delta % 2 == 0
        assert oracles.brute_delta(g, set(cert.s), set(cert.t)) == cert.delta

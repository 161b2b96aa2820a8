from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from folbkit import families as F
from folbkit import predicates as P
from folbkit.errors import BadParams
from folbkit.metric import build_metric

import oracles
from oracles import connected


def M(g):
    return build_metric(g)


@given(connected(max_n=7))
def test_weakly_modular(g):
    assert bool(P.weakly_modular(M(g)).holds) == oracles.weakly_modular(g)


@given(connected(max_n=7))
def test_bipartite(g):
    assert bool(P.is_bipartite(M(g)).holds) == nx.is_bipartite(g.to_networkx())


@given(connected(max_n=7))
def test_medians(g):
    m = M(g)
    for x, y, z in [(0, g.n - 1, g.n // 2), (0, 0, g.n - 1)]:
        assert set(P.medians(m, x, y, z)) == set(oracles.medians(g, x, y, z))
    counts = oracles.median_counts(g)
    assert bool(P.unique_medians(m).holds) == (counts == {1})


@given(connected(max_n=7))
def test_modular_median_condition(g):
    assert bool(P.modular_median(M(g)).holds) == (0 not in oracles.median_counts(g))


@given(connected(max_n=7))
def test_partial_cube(g):
    assert bool(P.is_partial_cube(M(g)).holds) == oracles.partial_cube(g)


@given(connected(max_n=7))
def test_convex_sets(g):
    m = M(g)
    d = oracles.dist(g)
    for v in range(g.n):
        for r in range(3):
            ball = np.flatnonzero(d[v] <= r)
            assert P.is_convex(m, ball) == oracles.is_convex(d, ball)
    hull = P.conv_hull(m, {0, g.n - 1})
    assert oracles.is_convex(d, hull)
    assert {0, g.n - 1} <= set(hull)


@given(connected(min_n=4, max_n=8))
def test_delta_star(g):
    m = M(g)
    assert P.delta_star(m) == Fraction(oracles.hyperbolicity_twice(g), 2)
    u, v, x, y = P.delta_star_witness(m)
    s = P.distance_sums(m, u, v, x, y)
    assert Fraction(s[2] - s[1], 2) == P.delta_star(m)


@given(connected(max_n=7), st.sampled_from([0, Fraction(1, 2), 1, Fraction(3, 2), 2]))
def test_interval_slim(g, delta):
    k = int(delta)
    r = P.interval_delta_slim(M(g), delta)
    assert bool(r.holds) == oracles.interval_slim(g, k)
    if not r.holds:
        x, y, z, u = r.witness
        d = oracles.dist(g)
        assert d[y, u] + d[u, z] == d[y, z]


def test_slim_examples():
    assert not P.interval_delta_slim(M(F.cycle(4)), 0).holds
    assert P.interval_delta_slim(M(F.tree(8, 1)), 0).holds
    with pytest.raises(BadParams):
        P.interval_delta_slim(M(F.cycle(4)), Fraction(1, 3))


@given(connected(max_n=6))
def test_distance_hereditary(g):
    assert bool(P.distance_hereditary_intervals(M(g)).holds) or not oracles.distance_hereditary(g)


def test_theta_classes_hypercube():
    m = M(F.hypercube(3))
    classes = P.theta_classes(m)
    assert len(classes) == 3
    assert all(len(c) == 4 for c in classes)


def test_partial_hamming_needs_partial_cube():
    assert P.partial_hamming(M(F.hypercube(3))).holds
    r = P.partial_hamming(M(F.cycle(5)))
    assert not r.holds


def test_clique_helly_and_c4w4():
    assert P.clique_helly(M(F.complete(5))).holds
    assert P.clique_helly(M(F.cycle(6))).holds
    assert not P.c4w4(M(F.cycle(4))).holds
    assert P.c4w4(M(F.wheel(4))).holds
    # the octahedron is the classic non-clique-Helly graph
    assert not P.clique_helly(M(F.octahedron(3))).holds


@pytest.mark.parametrize(
    "fn, g, want",
    [
        (P.pasch, F.wheel_plus_vertex(), True),
        (P.peano, F.wheel_plus_vertex(), False),
        (P.convex_intervals, F.cycle(6), True),
        (P.convex_intervals, F.cycle(5), True),
        (P.qc, F.cycle(6), False),
        (P.tc, F.cycle(4), True),
        (P.tc, F.cycle(5), False),
        (P.inc, F.complete(4), True),
        (P.is_antipodal_graph, F.hypercube(3), True),
        (P.is_antipodal_graph, F.path(3), False),
    ],
)
def test_examples(fn, g, want):
    assert bool(fn(M(g)).holds) == want


@given(connected(max_n=7))
def test_alpha_checks(g):
    m = M(g)
    a0 = bool(P.alpha_zero_condition(m).holds)
    a1 = bool(P.alpha_i_check(m, 1).holds)
    assert a0 <= a1  # alpha_0 implies alpha_1
    assert bool(P.alpha_i_check(m, 0).holds) == a0


@given(connected(max_n=7))
def test_witnesses_falsify(g):
    m = M(g)
    d = oracles.dist(g)
    r = P.alpha_zero_condition(m)
    if not r.holds:
        u, v, w, x = r.witness
        assert g.adj[v, w] and d[u, x] < d[u, v] + 1 + d[w, x]
    r = P.c4w4(m)
    if not r.holds:
        w, x, y, z = r.witness
        assert not (g.adj[w] & g.adj[x] & g.adj[y] & g.adj[z]).any()

import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from folbkit import families
from folbkit.metric import (
    TernaryRelation,
    build_metric,
    check_axioms,
    edge_relation,
    find_induced,
    find_isometric,
    interval,
    parse_relation,
)

import oracles
from oracles import connected


def axioms_literal(r):
    """The seven axioms transcribed quantifier by quantifier."""
    m = r.shape[0]
    V = range(m)

    def E(u, v):
        return u != v and all(not r[u, x, v] or x in (u, v) for x in V)

    bad = {}
    for u, v in itertools.product(V, V):
        if not r[u, u, v]:
            bad.setdefault("IB1", (u, v))
    for u, v, x in itertools.product(V, V, V):
        if r[u, x, v] and not r[v, x, u]:
            bad.setdefault("IB2", (u, v, x))
    for u, x in itertools.product(V, V):
        if r[u, x, u] and x != u:
            bad.setdefault("IB3", (u, x))
    for u, v, w, x in itertools.product(V, V, V, V):
        if r[u, w, v] and r[u, x, w] and not r[u, x, v]:
            bad.setdefault("IB4", (u, v, w, x))
        if r[u, v, x] and r[u, w, x] and r[u, v, w] and not r[v, w, x]:
            bad.setdefault("IB5", (u, v, w, x))
    for u, u2, v, v2 in itertools.product(V, V, V, V):
        if not (E(u, u2) and E(v, v2)):
            continue
        if r[u2, u, v2] and r[u, u2, v] and r[u, v2, v] and not r[u2, v, v2]:
            bad.setdefault("IB6", (u, u2, v, v2))
        if r[u, u2, v] and not r[u, v2, v] and not r[u2, v, v2] and not r[u, u2, v2]:
            bad.setdefault("IB7", (u, u2, v, v2))
    return sorted(bad.items())


@given(connected(max_n=7))
def test_distances_match_floyd_warshall(g):
    assert (build_metric(g).dist == oracles.dist(g)).all()


@given(connected(max_n=6))
def test_betweenness_matches_path_enumeration(g):
    assert (build_metric(g).betweenness() == oracles.between(g)).all()


@given(connected(max_n=7), st.data())
def test_interval_matches_oracle(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    m = build_metric(g)
    assert set(interval(m, u, v)) == oracles.interval(g, u, v)
    assert m.B(u, u, v) and m.B(u, v, v)


@given(connected(max_n=7))
def test_graph_betweenness_satisfies_axioms(g):
    assert check_axioms(build_metric(g)) == []


@given(connected(max_n=6))
def test_edge_relation_recovers_graph(g):
    e = edge_relation(build_metric(g).betweenness())
    assert (e == g.adj).all()


@given(st.integers(1, 4), st.data())
def test_axioms_match_literal_transcription(m, data):
    bits = data.draw(st.lists(st.booleans(), min_size=m**3, max_size=m**3))
    r = np.array(bits, dtype=bool).reshape(m, m, m)
    # bias towards near-graphic relations so the deeper axioms get exercised
    if data.draw(st.booleans()):
        r[np.arange(m), np.arange(m), :] = True
        r[:, np.arange(m), np.arange(m)] = True
    got = [(tag, tuple(w)) for tag, w in check_axioms(r)]
    assert got == axioms_literal(r)


def test_axiom_examples():
    r = TernaryRelation.from_triples(2, [(0, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1), (0, 1, 1), (1, 0, 0), (0, 1, 0)])
    tags = [t for t, _ in check_axioms(r)]
    assert "IB3" in tags
    empty = TernaryRelation.from_triples(2, [])
    assert check_axioms(empty)[0] == ("IB1", (0, 0))


def test_parse_relation():
    r = parse_relation("2\n0 0 1\n0 0 0\n")
    assert (0, 0, 1) in r
    assert (1, 1, 1) not in r


def test_metric_oracle_basics():
    m = build_metric(families.cycle(6))
    assert m.diameter() == 3
    assert m.E(0, 1) and not m.E(0, 2)
    assert set(np.flatnonzero(m.ball_mask(0, 1))) == {0, 1, 5}
    assert m.interval(0, 3) == frozenset(range(6))


def _nx_induced(g, h):
    gm = nx.isomorphism.GraphMatcher(g.to_networkx(), h.to_networkx())
    return gm.subgraph_is_isomorphic()


@given(connected(max_n=7))
def test_find_induced_agrees_with_networkx(g):
    for h in (families.cycle(4), families.k4_minus(), families.path(3), families.complete_bipartite(1, 3)):
        f = find_induced(build_metric(g), h)
        assert (f is not None) == _nx_induced(g, h)
        if f is not None:
            sub = g.adj[np.ix_(f, f)]
            assert (sub == h.adj).all()


@given(connected(max_n=7))
def test_find_isometric_preserves_distances(g):
    m = build_metric(g)
    for h in (families.cycle(4), families.cycle(5), families.cycle(6)):
        f = find_isometric(m, h)
        hd = oracles.dist(h)
        if f is not None:
            assert (m.dist[np.ix_(f, f)] == hd).all()
        else:
            for sub in itertools.permutations(range(g.n), h.n):
                assert not (m.dist[np.ix_(sub, sub)] == hd).all()


def test_isometric_cycle_examples():
    grid = build_metric(families.grid(2, 3))
    assert find_induced(grid, families.cycle(6)) is None
    assert find_induced(grid, families.cycle(4)) is not None
    # C6 is isometric in Q3; C6 is induced in the wheel W6 but not isometric there
    assert find_isometric(build_metric(families.hypercube(3)), families.cycle(6)) is not None
    w6 = build_metric(families.wheel(6))
    assert find_induced(w6, families.cycle(6)) is not None
    assert find_isometric(w6, families.cycle(6)) is None

import networkx as nx
import pytest
from hypothesis import given

from folbkit import families as F
from folbkit import recognizers as R
from folbkit.corpus import connected_graphs, trees
from folbkit.errors import BadParams, MissingData
from folbkit.graph import Graph

import oracles
from oracles import connected

GROUND_TRUTH = [
    ("median", F.hypercube(3), True),
    ("median", F.complete_bipartite(2, 3), False),
    ("modular", F.complete_bipartite(2, 3), True),
    ("bridged", F.cycle(4), False),
    ("bridged", F.complete(3), True),
    ("weakly_modular", F.cycle(5), False),
    ("convex_balls", F.cycle(5), True),
    ("partial_cube", F.cycle(6), True),
    ("median", F.cycle(6), False),
    ("pasch", F.wheel_plus_vertex(), True),
    ("peano", F.wheel_plus_vertex(), False),
    ("netlike_partial_cube", F.cycle(6), True),
    ("block_graph", F.tree(7, 2), True),
    ("helly", F.complete(4), True),
    ("helly", F.cycle(4), False),
    ("tree", F.path(5), True),
    ("tree", F.cycle(3), False),
]


@pytest.mark.parametrize("cid, g, want", GROUND_TRUTH, ids=[f"{c}-{g.name}" for c, g, _ in GROUND_TRUTH])
def test_ground_truth(cid, g, want):
    assert R.recognize(cid, g).value is want


def test_unknown_class():
    with pytest.raises(BadParams):
        R.recognize("no_such_class", F.path(2))


def test_classify_single_vertex():
    v = R.classify_all(F.complete(1))
    for cid in ("tree", "median", "helly", "partial_cube", "bipartite", "block_graph", "weakly_modular"):
        assert v[cid].value is True


def test_classify_c5_and_q4():
    v = R.classify_all(F.cycle(5))
    assert v["weakly_modular"].value is False
    assert v["convex_balls"].value is True
    q4 = R.classify_all(F.hypercube(4))
    for cid in ("median", "partial_cube", "ample", "com", "modular"):
        assert q4[cid].value is True


def test_classify_matches_recognize():
    g = F.wheel_plus_vertex()
    v = R.classify_all(g)
    assert list(v) == sorted(v)
    for cid, verdict in v.items():
        assert R.recognize(cid, g) == verdict


def test_verdict_text():
    v = R.recognize("weakly_modular", F.cycle(5))
    assert v.label == "false" and v.witness_text().startswith(v.conjunct + ":")
    assert not v
    assert R.tsv_lines({"median": R.recognize("median", F.hypercube(3))}) == ["median\ttrue\t"]


def test_witnesses_verify_on_small_graphs(atlas5):
    checked = 0
    for g in atlas5:
        for cid, v in R.classify_all(g).items():
            if v.value is False:
                assert R.verify_witness(cid, g, v), (cid, g.name, v)
                checked += 1
    assert checked > 500


@given(connected(min_n=6, max_n=7))
def test_witnesses_verify_random(g):
    for cid, v in R.classify_all(g).items():
        if v.value is False:
            assert R.verify_witness(cid, g, v), (cid, g.edges(), v)


# ---------------------------------------------------------- oracles per class


@pytest.mark.parametrize(
    "cid, oracle",
    [
        ("weakly_modular", oracles.weakly_modular),
        ("bipartite", lambda g: nx.is_bipartite(g.to_networkx())),
        ("partial_cube", oracles.partial_cube),
        ("modular", lambda g: nx.is_bipartite(g.to_networkx()) and 0 not in oracles.median_counts(g)),
        ("median", lambda g: oracles.median_counts(g) == {1}),
        ("bridged", lambda g: not oracles.isometric_cycles(g)),
        ("convex_balls", oracles.balls_convex),
        ("helly", oracles.helly_balls),
        ("tree", lambda g: not oracles.has_cycle(g)),
        ("block_graph", oracles.block_graph),
        ("distance_hereditary", oracles.distance_hereditary),
        ("ptolemaic", lambda g: oracles.distance_hereditary(g) and nx.is_chordal(g.to_networkx())),
    ],
)
def test_class_oracles(cid, oracle, atlas6):
    for g in atlas6:
        assert R.recognize(cid, g).value == bool(oracle(g)), g.name


def test_distance_hereditary_gem():
    # the two-of-three interval inclusions alone accept the gem
    gem = F.fan3()
    assert not oracles.distance_hereditary(gem)
    assert R.recognize("distance_hereditary", gem).value is False
    assert R.recognize("distance_hereditary", F.house()).value is False
    assert R.recognize("distance_hereditary", F.domino()).value is False


def test_tree_on_all_trees():
    for n in range(1, 10):
        for t in trees(n):
            assert R.recognize("tree", t).value is True


def test_interval_delta_slim_verdict():
    assert R.interval_delta_slim(F.cycle(4), 0).value is False
    assert R.interval_delta_slim(F.cycle(4), 1).value is True


def test_implication_audit_small(atlas5):
    assert R.implication_audit(atlas5) == []


def test_missing_list_gives_na(monkeypatch):
    def boom(name):
        raise MissingData(f"{name} gone")

    monkeypatch.setattr(F, "forbidden_list", boom)
    v = R.recognize("link_condition", F.cycle(4))
    assert v.value is None and v.label == "na" and "gone" in v.reason
    assert R.recognize("median", F.cycle(4)).value is True

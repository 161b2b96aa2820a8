import importlib.util
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

from folbkit import families as F
from folbkit.corpus import connected_graphs, random_connected, random_corpus, trees

SCRIPT = Path(__file__).resolve().parents[1] / "scripts" / "derive_lists.py"


def test_connected_counts():
    # OEIS A001349: 1, 1, 2, 6, 21, 112, 853
    counts = [sum(1 for g in connected_graphs(7) if g.n == n) for n in range(1, 8)]
    assert counts == [1, 1, 2, 6, 21, 112, 853]


def test_tree_counts():
    assert [len(trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_random_corpus_deterministic():
    a = random_corpus(20, seed=3)
    b = random_corpus(20, seed=3)
    assert a == b
    assert all(g.is_connected() and 2 <= g.n <= 9 for g in a)


def test_random_connected_sizes():
    rng = np.random.default_rng(0)
    for n in range(1, 12):
        g = random_connected(n, rng)
        assert g.n == n and g.is_connected()


@pytest.fixture(scope="module")
def derive():
    pytest.importorskip("pynauty")
    spec = importlib.util.spec_from_file_location("derive_lists", SCRIPT)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def same_classes(xs, ys):
    if len(xs) != len(ys):
        return False
    return all(any(nx.is_isomorphic(x.to_networkx(), y.to_networkx()) for y in ys) for x in xs)


def test_augment_counts(derive):
    layer = np.array([g.adj for g in connected_graphs(5) if g.n == 5], dtype=bool)
    six = derive.augment(layer)
    assert len(six) == 112
    assert len(derive.augment(six)) == 853


def test_beineke_reproducible(derive):
    got = derive.derive_beineke(connected_graphs(6))
    assert same_classes(got, F.forbidden_list("beineke_F"))


def test_pseudo_median_reproducible(derive):
    got = derive.derive_pseudo_median_h(connected_graphs(6))
    assert same_classes(got, F.forbidden_list("pseudo_median_H"))


def test_quasi_median_oracle_agrees(derive):
    import oracles
    from folbkit.metric import build_metric

    for g in connected_graphs(5)[-6:]:
        counts = derive.quasi_median_counts(build_metric(g))
        for x, y, z in [(0, 1, 2), (0, g.n - 1, 2), (1, 1, g.n - 1)]:
            assert counts[x, y, z] == oracles.quasi_median_count(g, x, y, z)


def test_scan_kernels_match_oracles(derive):
    import oracles

    for g in connected_graphs(6)[::7]:
        d = oracles.dist(g)
        assert derive._twice_delta(d) == oracles.hyperbolicity_twice(g)
        assert derive._convex_balls(d) == oracles.balls_convex(g)

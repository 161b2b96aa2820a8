"""Prelude sentences against the direct recognizers on small graphs."""

import numpy as np
import pytest

from folbkit import families as F
from folbkit import recognizers as R
from folbkit.folb import default_prelude, evaluate, sentence
from folbkit.graph import Graph
from folbkit.metric import build_metric

PRELUDE = default_prelude()
CLASSES = R.class_ids()


def folb_verdict(name, m):
    return evaluate(sentence(PRELUDE, name), m).value


@pytest.fixture(scope="module")
def metrics(atlas5):
    return [(g.name, build_metric(g)) for g in atlas5]


@pytest.mark.parametrize("cid", CLASSES)
def test_sentence_matches_direct(cid, metrics):
    spec = R.get_spec(cid)
    for name, m in metrics:
        assert folb_verdict(spec.sentence, m) == R.recognize(cid, m).value, name


@pytest.mark.parametrize("base, alt", [(b, a) for b, alts in R.ALTERNATES.items() for a in alts])
def test_alternate_sentences(base, alt, metrics):
    for name, m in metrics:
        assert folb_verdict(alt, m) == R.recognize(base, m).value, name


@pytest.mark.parametrize(
    "cid, g",
    [
        ("distance_hereditary", F.fan3()),
        ("distance_hereditary", F.house()),
        ("median", F.hypercube(3)),
        ("weakly_modular", F.cycle(5)),
        ("convex_balls", F.cycle(5)),
        ("partial_cube", F.cycle(6)),
        ("bridged", F.cycle(4)),
        ("pasch", F.wheel_plus_vertex()),
        ("peano", F.wheel_plus_vertex()),
    ],
)
def test_named_graphs(cid, g):
    m = build_metric(g)
    assert folb_verdict(R.get_spec(cid).sentence, m) == R.recognize(cid, m).value


def test_false_sentence_witness_is_reported():
    r = evaluate(sentence(PRELUDE, "median"), build_metric(F.complete_bipartite(2, 3)))
    assert r.value is False and len(r.witness) >= 1


def _extensions(h):
    n = h.n
    for mask in range(1, 1 << n):
        a = np.zeros((n + 1, n + 1), dtype=bool)
        a[:n, :n] = h.adj
        nb = [(mask >> j) & 1 == 1 for j in range(n)]
        a[n, :n] = nb
        a[:n, n] = nb
        yield Graph(a)


@pytest.mark.slow
def test_half_hyperbolic_beyond_six_vertices():
    # one-vertex extensions of the list members that keep convex balls
    f = sentence(PRELUDE, "half_hyperbolic")
    seen = {True: 0, False: 0}
    for h in F.forbidden_list("half_hyperbolic_H"):
        for g in _extensions(h):
            m = build_metric(g)
            if not R.recognize("convex_balls", m).value:
                continue
            want = R.recognize("half_hyperbolic", m).value
            assert evaluate(f, m).value == want, g.edges()
            seen[want] += 1
    assert seen[True] > 0 and seen[False] > 0

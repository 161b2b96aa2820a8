from importlib import resources

import networkx as nx
import pytest

from folbkit import families as F
from folbkit.errors import BadParams, MissingData
from folbkit.graph import Graph

import oracles


def is_line_graph(h):
    for comp in nx.connected_components(h):
        c = h.subgraph(comp)
        if c.number_of_edges() == 0:
            continue
        try:
            nx.inverse_line_graph(c)
        except nx.NetworkXError:
            return False
    return True


def iso(g, h):
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


@pytest.mark.parametrize(
    "g, n, m",
    [
        (F.complete(5), 5, 10),
        (F.complete_bipartite(2, 3), 5, 6),
        (F.k4_minus(), 4, 5),
        (F.k33_minus(), 6, 8),
        (F.path(4), 4, 3),
        (F.cycle(7), 7, 7),
        (F.star(4), 5, 4),
        (F.hypercube(4), 16, 32),
        (F.halved_cube(4), 8, 24),
        (F.johnson(5, 2), 10, 30),
        (F.hamming(3, 3), 9, 18),
        (F.octahedron(3), 6, 12),
        (F.wheel(5), 6, 10),
        (F.almost_wheel(4), 5, 7),
        (F.fan3(), 5, 7),
        (F.house(), 5, 6),
        (F.domino(), 6, 7),
        (F.grid(3, 4), 12, 17),
        (F.wheel_plus_vertex(), 6, 10),
    ],
)
def test_sizes(g, n, m):
    assert (g.n, g.m) == (n, m)
    assert g.is_connected()


def test_against_networkx_generators():
    assert iso(F.hypercube(3), Graph.from_networkx(nx.hypercube_graph(3)))
    assert iso(F.complete_bipartite(3, 3), Graph.from_networkx(nx.complete_bipartite_graph(3, 3)))
    assert iso(F.johnson(4, 2), F.octahedron(3))
    assert iso(F.hamming(2, 2, 2), F.hypercube(3))
    assert iso(F.grid(2, 2), F.cycle(4))
    assert iso(F.pyramid(), F.wheel(4))
    assert iso(F.halved_cube(3), F.complete(4))


def test_hypercube_labelling():
    g = F.hypercube(3)
    for u, v in g.edges():
        assert bin(u ^ v).count("1") == 1


def test_tree_family():
    for n in range(1, 12):
        g = F.tree(n, seed=n)
        assert g.m == n - 1 and g.is_connected()
    assert F.tree(9, seed=3) == F.tree(9, seed=3)


def test_fixture_pairs():
    a, b = F.euler_a_star(1), F.euler_b_star(1)
    assert iso(a, F.complete_bipartite(2, 2))
    assert iso(b, F.complete_bipartite(2, 3))
    assert iso(F.euler_a_star(2), F.complete_bipartite(2, 4))
    ca, cb = F.chordal_a_star(3), F.chordal_b_star(3)
    assert ca.n == cb.n == 13
    assert nx.is_chordal(ca.to_networkx()) and not nx.is_chordal(cb.to_networkx())
    ja, jb = F.johnson_a_star(3), F.johnson_b_star(3)
    assert ja.n == jb.n == 7


@pytest.mark.parametrize("text", ["cycle(2)", "johnson_A*(4)", "path(0)", "grid(0, 2)", "euler_A*(0)", "cycle(x)"])
def test_bad_params(text):
    with pytest.raises(BadParams):
        F.generate_from_spec(text)


def test_dpo_not_bundled():
    with pytest.raises(MissingData):
        F.generate_from_spec("dpo_A*()")


def test_spec_parsing_and_aliases():
    assert F.parse_spec("Q(3)").family == "hypercube"
    assert F.parse_spec("euler_a_star(2)") == F.FamilySpec("euler_A*", (2,))
    assert F.generate_from_spec("k4m()") == F.k4_minus()
    assert F.generate_from_spec("hamming(2, 3)").n == 6


# ---------------------------------------------------------------- data lists


@pytest.mark.parametrize("name", sorted(F.LIST_FILES))
def test_list_headers_consistent(name):
    graphs = F.forbidden_list(name)
    meta = F.list_metadata(name)
    assert int(meta["count"]) == len(graphs)
    assert meta["sizes"] == " ".join(f"{g.n}/{g.m}" for g in graphs)
    assert meta["sha256"] == F.body_checksum(graphs)
    for i, g in enumerate(graphs):
        assert g.is_connected()
        for h in graphs[:i]:
            assert not iso(g, h)


def test_beineke_list():
    graphs = F.forbidden_list("beineke_F")
    assert len(graphs) == 9
    assert iso(graphs[0], F.star(3))
    for g in graphs:
        assert not is_line_graph(g.to_networkx())
        for v in range(g.n):
            assert is_line_graph(g.induced([u for u in range(g.n) if u != v]).to_networkx())
    primed = F.forbidden_list("beineke_F_primed")
    assert [g.n for g in primed] == [g.n + 1 for g in graphs]


def test_pseudo_median_list_members_lack_unique_quasi_medians():
    from folbkit import predicates as P
    from folbkit.metric import build_metric

    for g in F.forbidden_list("pseudo_median_H"):
        m = build_metric(g)
        assert P.weakly_modular(m).holds
        counts = {oracles.quasi_median_count(g, x, y, z) for x in range(g.n) for y in range(g.n) for z in range(g.n)}
        assert counts != {1}


def test_half_hyperbolic_list_members():
    for g in F.forbidden_list("half_hyperbolic_H"):
        assert oracles.balls_convex(g)
        assert oracles.hyperbolicity_twice(g) >= 2
    hc = F.alpha_one_pattern()
    assert any(iso(hc, g) for g in F.forbidden_list("half_hyperbolic_H"))


def test_unknown_list():
    with pytest.raises(BadParams):
        F.forbidden_list("nope")


def test_corrupt_list_detected(tmp_path, monkeypatch):
    text = (resources.files("folbkit.data") / "beineke_F.graphs").read_text()
    bad = text.replace("# count: 9", "# count: 8")
    d = tmp_path / "data"
    d.mkdir()
    (d / "beineke_F.graphs").write_text(bad)
    monkeypatch.setattr(resources, "files", lambda pkg: d)
    with pytest.raises(MissingData):
        F.forbidden_list("beineke_F")
    assert not F.has_list("beineke_F")


def test_half_hyperbolic_list_has_six_entries():
    assert len(F.forbidden_list("half_hyperbolic_H")) == 6

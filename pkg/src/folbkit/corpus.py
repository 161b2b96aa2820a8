"""Deterministic graph corpora for exhaustive and randomized checks."""

from __future__ import annotations

import functools

import networkx as nx
import numpy as np

from .graph import Graph


@functools.lru_cache(maxsize=None)
def _atlas() -> tuple:
    return tuple(nx.graph_atlas_g())


def connected_graphs(max_n: int = 6, min_n: int = 1) -> list[Graph]:
    """All connected graphs on ``min_n..max_n`` vertices, one per isomorphism class.

    Uses the graph atlas, so ``max_n`` is capped at 7.
    """
    if max_n > 7:
        raise ValueError("the atlas only reaches 7 vertices")
    out = []
    for i, g in enumerate(_atlas()):
        if min_n <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            out.append(Graph.from_networkx(g, name=f"atlas[{i}]"))
    return out


def all_graphs(max_n: int = 6, min_n: int = 1) -> list[Graph]:
    """All graphs (connected or not) from the atlas."""
    return [
        Graph.from_networkx(g, name=f"atlas[{i}]")
        for i, g in enumerate(_atlas())
        if min_n <= g.number_of_nodes() <= max_n
    ]


def random_connected(n: int, rng: np.random.Generator, p_extra: float | None = None) -> Graph:
    """Uniform random labelled tree plus independent extra edges."""
    if n == 1:
        return Graph(np.zeros((1, 1), dtype=bool))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [int(t) for t in rng.integers(0, n, size=n - 2)]
    t = nx.from_prufer_sequence(seq)
    a = nx.to_numpy_array(t, nodelist=range(n), dtype=bool)
    if p_extra is None:
        p_extra = float(rng.uniform(0.0, 0.6))
    extra = np.triu(rng.random((n, n)) < p_extra, 1)
    a |= extra | extra.T
    return Graph(a)


def random_corpus(count: int, max_n: int = 9, min_n: int = 2, seed: int = 0) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        g = random_connected(n, rng)
        out.append(Graph(g.adj, f"random[{seed}:{i}]"))
    return out


def trees(n: int) -> list[Graph]:
    if n < 2:
        return [Graph.from_edges(n, [], name=f"tree{n}[0]")]
    return [Graph.from_networkx(t, name=f"tree{n}[{i}]") for i, t in enumerate(nx.nonisomorphic_trees(n))]


def corpus_up_to_8(random_count: int = 300, seed: int = 8) -> list[Graph]:
    """Atlas graphs (n <= 7), every tree on 8 vertices and random connected 8-vertex graphs."""
    rng = np.random.default_rng(seed)
    extra = [Graph(random_connected(8, rng).adj, f"random8[{seed}:{i}]") for i in range(random_count)]
    return connected_graphs(7) + trees(8) + extra

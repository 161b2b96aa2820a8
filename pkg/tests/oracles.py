"""Brute-force reference implementations and hypothesis strategies for tests.

Nothing here shares code with the package beyond the Graph container.
"""

import itertools

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from folbkit.corpus import random_connected
from folbkit.graph import Graph


@st.composite
def connected(draw, min_n=1, max_n=7):
    """Random connected graph: a random tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.0, 0.7))
    return random_connected(n, np.random.default_rng(seed), p)


@st.composite
def graph_with_perm(draw, max_n=7):
    g = draw(connected(max_n=max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, np.array(perm)


def dist(g: Graph) -> np.ndarray:
    """Floyd-Warshall."""
    n = g.n
    d = np.where(g.adj, 1, n + 1).astype(np.int64)
    np.fill_diagonal(d, 0)
    for k in range(n):
        d = np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :])
    return d


def between(g: Graph) -> np.ndarray:
    """b[u, x, v] iff x lies on a shortest u-v path, from shortest-path enumeration."""
    h = g.to_networkx()
    n = g.n
    b = np.zeros((n, n, n), dtype=bool)
    for u in range(n):
        for v in range(n):
            for p in nx.all_shortest_paths(h, u, v):
                b[u, p, v] = True
    return b


def interval(g: Graph, u, v) -> set:
    return set(np.flatnonzero(between(g)[u, :, v]))


def is_convex(d, S) -> bool:
    S = set(S)
    n = d.shape[0]
    return all(not (d[a, x] + d[x, b] == d[a, b]) or x in S for a in S for b in S for x in range(n))


def balls_convex(g: Graph) -> bool:
    d = dist(g)
    return all(is_convex(d, np.flatnonzero(d[v] <= r)) for v in range(g.n) for r in range(g.n))


def hyperbolicity_twice(g: Graph) -> int:
    d = dist(g)
    best = 0
    for q in itertools.combinations(range(g.n), 4):
        u, v, x, y = q
        s = sorted([d[u, v] + d[x, y], d[u, x] + d[v, y], d[u, y] + d[v, x]])
        best = max(best, s[2] - s[1])
    return int(best)


def helly_balls(g: Graph) -> bool:
    """Every pairwise-intersecting family of balls has a common vertex.

    A family of balls is determined by its maximal members under inclusion of
    the ball sets, so families are enumerated over distinct ball sets.
    """
    d = dist(g)
    n = g.n
    balls = {frozenset(np.flatnonzero(d[v] <= r)) for v in range(n) for r in range(n)}
    balls = sorted(balls, key=sorted)
    meets = {(a, b): bool(a & b) for a in balls for b in balls}
    # grow cliques of pairwise-meeting balls and check the common part
    def grow(chosen, common, start):
        if not common:
            return False
        for i in range(start, len(balls)):
            b = balls[i]
            if all(meets[(b, c)] for c in chosen):
                if not grow(chosen + [b], common & b, i + 1):
                    return False
        return True

    return grow([], frozenset(range(n)), 0)


def has_cycle(g: Graph) -> bool:
    """Depth-first search for a back edge."""
    seen = [-1] * g.n
    for s in range(g.n):
        if seen[s] >= 0:
            continue
        stack = [(s, -1)]
        while stack:
            v, parent = stack.pop()
            if seen[v] >= 0:
                return True
            seen[v] = s
            for w in np.flatnonzero(g.adj[v]):
                if w != parent:
                    if seen[w] >= 0 and w != parent:
                        return True
                    stack.append((int(w), v))
    return False


def quasi_median_count(g: Graph, x, y, z) -> int:
    """Number of ordered quasi-medians of x, y, z."""
    d = dist(g)
    n = g.n

    def mt(a, b, c):
        return all(
            len([t for t in range(n) if d[p, t] + d[t, q] == d[p, q] and d[p, t] + d[t, r] == d[p, r]]) == 1
            for p, q, r in ((a, b, c), (b, a, c), (c, a, b))
        )

    def col(u, a, b, v):
        return d[u, a] + d[a, b] + d[b, v] == d[u, v]

    return sum(
        1
        for a, b, c in itertools.product(range(n), repeat=3)
        if col(x, a, b, y) and col(x, a, c, z) and col(y, b, c, z) and mt(a, b, c)
    )


def weakly_modular(g: Graph) -> bool:
    """Triangle and quadrangle conditions in their distance form."""
    d = dist(g)
    a = g.adj
    n = g.n
    for u in range(n):
        for v, w in itertools.combinations(range(n), 2):
            k = d[u, v]
            if d[u, w] != k or k < 1:
                continue
            closer = [x for x in range(n) if a[v, x] and a[w, x] and d[u, x] == k - 1]
            if a[v, w] and not closer:
                return False
            if d[v, w] == 2:
                for z in range(n):
                    if a[v, z] and a[w, z] and d[u, z] == k + 1 and not closer:
                        return False
    return True


def medians(g: Graph, x, y, z) -> list:
    d = dist(g)
    return [
        t
        for t in range(g.n)
        if d[x, t] + d[t, y] == d[x, y] and d[y, t] + d[t, z] == d[y, z] and d[x, t] + d[t, z] == d[x, z]
    ]


def median_counts(g: Graph) -> set:
    r = range(g.n)
    return {len(medians(g, x, y, z)) for x in r for y in r for z in r}


def partial_cube(g: Graph) -> bool:
    """Bipartite with every half-space convex."""
    if not nx.is_bipartite(g.to_networkx()):
        return False
    d = dist(g)
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            w = [x for x in range(g.n) if d[x, a] < d[x, b]]
            if not is_convex(d, w):
                return False
    return True


def isometric_cycles(g: Graph, min_len=4) -> list:
    d = dist(g)
    h = g.to_networkx()
    out = []
    for c in nx.simple_cycles(h, length_bound=g.n):
        k = len(c)
        if k < min_len:
            continue
        if all(d[c[i], c[j]] == min(abs(i - j), k - abs(i - j)) for i in range(k) for j in range(i)):
            out.append(c)
    return out


def distance_hereditary(g: Graph) -> bool:
    """Every connected induced subgraph is isometric."""
    d = dist(g)
    h = g.to_networkx()
    for k in range(2, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            s = h.subgraph(sub)
            if not nx.is_connected(s):
                continue
            ds = dict(nx.all_pairs_shortest_path_length(s))
            if any(ds[a][b] != d[a, b] for a in sub for b in sub):
                return False
    return True


def block_graph(g: Graph) -> bool:
    """Chordal and diamond-free."""
    h = g.to_networkx()
    if not nx.is_chordal(h):
        return False
    for u, v in g.edges():
        if len(set(h[u]) & set(h[v])) >= 2 and any(
            not h.has_edge(a, b) for a, b in itertools.combinations(set(h[u]) & set(h[v]), 2)
        ):
            return False
    return True


def interval_slim(g: Graph, k: int) -> bool:
    """Every vertex of I(y,z) is within k of I(x,y) or I(x,z)."""
    d = dist(g)
    n = g.n
    ivl = [[[t for t in range(n) if d[a, t] + d[t, b] == d[a, b]] for b in range(n)] for a in range(n)]
    for x, y, z in itertools.product(range(n), repeat=3):
        near = ivl[x][y] + ivl[x][z]
        for u in ivl[y][z]:
            if min(d[u, t] for t in near) > k:
                return False
    return True

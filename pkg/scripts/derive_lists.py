"""Derive the bundled forbidden-subgraph lists by exhaustive search.

Each list is the set of minimal members (under induced or isometric
embedding) of a class of "bad" graphs, searched over all connected graphs up
to a vertex bound. Writes ``src/folbkit/data/<list>.graphs``.

    python3 scripts/derive_lists.py [--max-n 10]
"""

from __future__ import annotations

import argparse
import itertools
import time
from pathlib import Path

import networkx as nx
import numpy as np
import pynauty

from folbkit import predicates as P
from folbkit._accel import jit as njit
from folbkit.corpus import connected_graphs
from folbkit.families import body_checksum
from folbkit.graph import Graph, dumps
from folbkit.metric import build_metric, find_induced, find_isometric

DATA = Path(__file__).resolve().parents[1] / "src" / "folbkit" / "data"


# ---------------------------------------------------------------- oracles


def quasi_median_counts(m) -> np.ndarray:
    """count[x,y,z] = number of ordered quasi-medians (x', y', z') of x, y, z."""
    T = m.betweenness()  # T[u,x,v]: x in I(u,v)
    n = m.n
    # metric triangle: each pair of intervals from a corner meets only in that corner
    Ti = T.astype(np.int64)
    meet = np.einsum("axb,axc->abc", Ti, Ti)  # |I(a,b) & I(a,c)|
    mt = (meet == 1) & (meet.transpose(1, 0, 2) == 1) & (meet.transpose(1, 2, 0) == 1)
    # col[u, x, y, v]: x, y lie in that order on a geodesic from u to v
    col = np.einsum("uxv,xyv->uxyv", Ti, Ti) > 0
    out = np.zeros((n, n, n), dtype=np.int64)
    for x, y, z in itertools.product(range(n), repeat=3):
        a = col[x, :, :, y]  # [x1, y1]
        b = col[x, :, :, z]  # [x1, z1]
        c = col[y, :, :, z]  # [y1, z1]
        q = mt & a[:, :, None] & b[:, None, :] & c[None, :, :]
        out[x, y, z] = int(q.sum())
    return out


def weakly_median_oracle(m) -> bool:
    return bool(P.weakly_modular(m)) and bool((quasi_median_counts(m) == 1).all())


def pseudo_modular_oracle(m) -> bool:
    return bool(P.weakly_modular(m)) and bool(P.metric_triangles_trivial(m, allow_triangles=True))


def convex_balls_oracle(m) -> bool:
    d = m.dist
    for v in range(m.n):
        for r in range(1, int(d[v].max())):
            if not P.is_convex(m, np.flatnonzero(d[v] <= r)):
                return False
    return True


def line_graph_oracle(g: Graph) -> bool:
    h = g.to_networkx()
    if h.number_of_edges() == 0:
        return True
    try:
        nx.inverse_line_graph(h)
    except nx.NetworkXError:
        return False
    return True


# ----------------------------------------------------------- enumeration


@njit
def _dist(a):
    n = a.shape[0]
    d = np.full((n, n), -1, dtype=np.int64)
    q = np.empty(n, dtype=np.int64)
    for s in range(n):
        d[s, s] = 0
        q[0] = s
        h, t = 0, 1
        while h < t:
            u = q[h]
            h += 1
            for w in range(n):
                if a[u, w] and d[s, w] < 0:
                    d[s, w] = d[s, u] + 1
                    q[t] = w
                    t += 1
    return d


@njit
def _convex_balls(d):
    n = d.shape[0]
    for v in range(n):
        for r in range(1, n):
            # a ball is convex iff no geodesic between two members leaves it
            for a in range(n):
                if d[v, a] > r:
                    continue
                for b in range(n):
                    if d[v, b] > r:
                        continue
                    for x in range(n):
                        if d[v, x] > r and d[a, x] + d[x, b] == d[a, b]:
                            return False
    return True


@njit
def _twice_delta(d):
    n = d.shape[0]
    best = 0
    for u in range(n):
        for v in range(u + 1, n):
            for x in range(v + 1, n):
                for y in range(x + 1, n):
                    s1 = d[u, v] + d[x, y]
                    s2 = d[u, x] + d[v, y]
                    s3 = d[u, y] + d[v, x]
                    hi = max(s1, max(s2, s3))
                    lo = min(s1, min(s2, s3))
                    mid = s1 + s2 + s3 - hi - lo
                    if hi - mid > best:
                        best = hi - mid
    return best


@njit
def _alpha1_fails(d):
    n = d.shape[0]
    for v in range(n):
        for w in range(n):
            if d[v, w] != 1:
                continue
            for u in range(n):
                if d[u, v] + 1 != d[u, w]:
                    continue
                for x in range(n):
                    if 1 + d[w, x] == d[v, x] and d[u, x] < d[u, v] + d[w, x]:
                        return True
    return False


@njit
def _scan(parents, n):
    """Flags for every one-vertex extension: bit 0 = convex balls and 2*delta >= 2,
    bit 1 = convex balls and alpha_1 violated."""
    p = parents.shape[0]
    k = 1 << (n - 1)
    out = np.zeros((p, k), dtype=np.int8)
    a = np.zeros((n, n), dtype=np.bool_)
    for i in range(p):
        a[: n - 1, : n - 1] = parents[i]
        for mask in range(1, k):
            for j in range(n - 1):
                bit = (mask >> j) & 1 == 1
                a[n - 1, j] = bit
                a[j, n - 1] = bit
            d = _dist(a)
            hyp = _twice_delta(d) >= 2
            a1 = _alpha1_fails(d)
            if (hyp or a1) and _convex_balls(d):
                out[i, mask] = hyp + 2 * a1
    return out


def extension_hits(parents: np.ndarray):
    """Isomorphism classes of one-vertex extensions flagged by :func:`_scan`."""
    flags = _scan(parents, parents.shape[1] + 1)
    hits: dict = {}
    for bit in (1, 2):
        seen: dict = {}
        for i, mask in zip(*np.nonzero(flags & bit)):
            a = _extend(parents[i], int(mask))
            seen.setdefault(certificate(a), a)
        hits[bit] = [Graph(seen[k]) for k in sorted(seen)]
    return hits


def certificate(a: np.ndarray) -> bytes:
    n = a.shape[0]
    g = pynauty.Graph(n, adjacency_dict={i: [int(j) for j in np.flatnonzero(a[i])] for i in range(n)})
    return pynauty.certificate(g)


def _extend(parent: np.ndarray, mask: int) -> np.ndarray:
    n = parent.shape[0] + 1
    a = np.zeros((n, n), dtype=bool)
    a[: n - 1, : n - 1] = parent
    nb = [(mask >> j) & 1 == 1 for j in range(n - 1)]
    a[n - 1, : n - 1] = nb
    a[: n - 1, n - 1] = nb
    return a


def augment(parents: np.ndarray) -> np.ndarray:
    """Connected graphs on one more vertex, up to isomorphism.

    Every connected graph has a non-cut vertex, so adding one vertex with
    every nonempty neighbourhood to every parent reaches all of them.
    """
    seen: dict = {}
    for parent in parents:
        for mask in range(1, 1 << parent.shape[0]):
            a = _extend(parent, mask)
            seen.setdefault(certificate(a), a)
    return np.array([seen[k] for k in sorted(seen)], dtype=bool)


def minimal_members(graphs, member, embed):
    """Members with no smaller member embedded, in (n, m) order."""
    found = []
    for g in sorted(graphs, key=lambda g: (g.n, g.m)):
        m = build_metric(g)
        if not member(m):
            continue
        if any(h.n < g.n and embed(m, h) is not None for h in found):
            continue
        if any(h.n == g.n and nx.is_isomorphic(h.to_networkx(), g.to_networkx()) for h in found):
            continue
        found.append(Graph(g.adj))
    return found


def canonical(g: Graph) -> Graph:
    """Relabel by decreasing degree, then BFS order, for readable files."""
    h = g.to_networkx()
    start = max(h.nodes, key=lambda v: (h.degree(v), -v))
    order = list(nx.bfs_tree(h, start))
    perm = np.argsort(order)
    return g.relabel(perm)


def write_list(name: str, graphs, comment: str, extra: dict | None = None) -> Path:
    graphs = [canonical(g) for g in graphs]
    lines = [f"# {comment}"]
    lines.append(f"# count: {len(graphs)}")
    lines.append("# sizes: " + " ".join(f"{g.n}/{g.m}" for g in graphs))
    for k, v in (extra or {}).items():
        lines.append(f"# {k}: {v}")
    lines.append(f"# sha256: {body_checksum(graphs)}")
    body = "".join(dumps(g) for g in graphs)
    path = DATA / f"{name}.graphs"
    path.write_text("\n".join(lines) + "\n" + body)
    return path


# ------------------------------------------------------------------ lists


def derive_pseudo_median_h(pool):
    bad = lambda m: bool(P.weakly_modular(m)) and not weakly_median_oracle(m)
    hs = minimal_members(pool, bad, find_induced)
    # the same list must serve pseudo-modular graphs
    for g in pool:
        m = build_metric(g)
        if pseudo_modular_oracle(m):
            unique = bool((quasi_median_counts(m) == 1).all())
            free = all(find_induced(m, h) is None for h in hs)
            assert unique == free, f"pseudo-modular mismatch on {g!r}"
    return hs


def derive_beineke(pool):
    return minimal_members(pool, lambda m: not line_graph_oracle(m.graph), find_induced)


def derive_half_hyperbolic(pool):
    bad = lambda m: convex_balls_oracle(m) and P.delta_star(m) > 0.5
    hs = minimal_members(pool, bad, find_isometric)
    not_a1 = lambda m: convex_balls_oracle(m) and not P.alpha_i_check(m, 1)
    hc = minimal_members(pool, not_a1, find_isometric)
    return hs, hc


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args(argv)

    t0 = time.time()
    pool = connected_graphs(7)
    layer = np.array([g.adj for g in pool if g.n == 7], dtype=bool)
    for n in range(8, min(args.max_n, 9) + 1):
        layer = augment(layer)
        print(f"n={n}: {len(layer)} connected graphs ({time.time() - t0:.1f}s)")
        if n == 8:
            pool += [Graph(a) for a in layer]
    fs = derive_beineke([g for g in pool if g.n <= 6])
    print("beineke_F:", [(g.n, g.m) for g in fs])
    write_list("beineke_F", fs, "induced-minimal non-line graphs")

    hs = derive_pseudo_median_h([g for g in pool if g.n <= 7])
    print("pseudo_median_H:", [(g.n, g.m) for g in hs])
    write_list("pseudo_median_H", hs, "induced-minimal weakly modular graphs without unique quasi-medians")

    # beyond n = 8 only the flagged one-vertex extensions are kept
    big = []
    if args.max_n >= 9:
        parents = np.array([g.adj for g in pool if g.n == 8], dtype=bool)
        for n in range(9, args.max_n + 1):
            hits = extension_hits(parents)
            big += hits[1] + hits[2]
            print(f"n={n}: flagged {len(hits[1])} hyperbolic, {len(hits[2])} alpha_1 ({time.time() - t0:.1f}s)")
            if n < args.max_n:
                parents = layer if n == 9 else augment(parents)
    hh, hc = derive_half_hyperbolic(pool + big)
    print("half_hyperbolic_H:", [(g.n, g.m) for g in hh])
    print("alpha_one minimal:", [(g.n, g.m) for g in hc])
    assert len(hc) == 1, "expected a single minimal alpha_1 obstruction"
    canon = [canonical(g) for g in hh]
    idx = [i for i, g in enumerate(canon) if nx.is_isomorphic(g.to_networkx(), hc[0].to_networkx())]
    assert len(idx) == 1
    write_list(
        "half_hyperbolic_H",
        hh,
        "isometric-minimal graphs with convex balls and hyperbolicity above 1/2",
        {"hc_index": idx[0]},
    )
    print(f"done in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()

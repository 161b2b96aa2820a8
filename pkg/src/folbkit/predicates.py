"""Direct (non-logical) implementations of the metric conditions.

Every whole-graph condition returns a :class:`Check`: a truth value plus the
lexicographically least counterexample in the order of the condition's
quantified variables. Functions take a :class:`MetricOracle`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

import networkx as nx
import numpy as np

from . import _kernels
from .errors import NotPartialCube
from .graph import Graph
from .metric import MetricOracle, find_induced, find_subgraph


class Check(NamedTuple):
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return bool(self.holds)


OK = Check(True, None)


def _fail(*w) -> Check:
    return Check(False, tuple(int(t) for t in w))


def _first(mask) -> Optional[tuple]:
    idx = np.argwhere(mask)
    return tuple(int(t) for t in idx[0]) if len(idx) else None


def _mask(m: MetricOracle, S) -> np.ndarray:
    if isinstance(S, np.ndarray) and S.dtype == bool:
        return S
    out = np.zeros(m.n, dtype=bool)
    out[list(S)] = True
    return out


def _set(mask) -> frozenset:
    return frozenset(int(i) for i in np.flatnonzero(mask))


def _imatmul(a, b) -> np.ndarray:
    # boolean matrix product
    return (a.astype(np.int32) @ b.astype(np.int32)) > 0


# ------------------------------------------------------------------ convexity


def interval_union(m: MetricOracle, S) -> np.ndarray:
    """Mask of the union of I(x, y) over x, y in S."""
    s = np.flatnonzero(_mask(m, S))
    d = m.dist
    if len(s) == 0:
        return np.zeros(m.n, dtype=bool)
    # inside[a, b, z] = z in I(s_a, s_b)
    inside = d[s][:, None, :] + d[s][None, :, :] == d[np.ix_(s, s)][:, :, None]
    return inside.any(axis=(0, 1))


def is_convex(m: MetricOracle, S) -> bool:
    mask = _mask(m, S)
    return bool(not (interval_union(m, mask) & ~mask).any())


def conv_hull(m: MetricOracle, S) -> frozenset:
    mask = _mask(m, S).copy()
    while True:
        nxt = interval_union(m, mask)
        if np.array_equal(nxt, mask):
            return _set(mask)
        mask = nxt


# ------------------------------------------------------ local metric conditions


def _closer_adj(m: MetricOracle, v: int) -> np.ndarray:
    """``L[x, z]``: z is a neighbour of x one step closer to v."""
    dv = m.dist[v]
    return m.adj & (dv[None, :] == dv[:, None] - 1)


def tc(m: MetricOracle) -> Check:
    """Triangle condition; witness (v, x, y)."""
    d, adj = m.dist, m.adj
    for v in range(m.n):
        dv = d[v]
        L = _closer_adj(m, v)
        common = _imatmul(L, L.T)
        bad = adj & (dv[:, None] == dv[None, :]) & (dv[:, None] > 0) & ~common
        w = _first(bad)
        if w:
            return _fail(v, *w)
    return OK


def qc(m: MetricOracle) -> Check:
    """Quadrangle condition; witness (v, x, y, u)."""
    d, adj = m.dist, m.adj
    n = m.n
    ne = ~adj & ~np.eye(n, dtype=bool)
    for v in range(n):
        dv = d[v]
        L = _closer_adj(m, v)
        U = adj & (dv[None, :] == dv[:, None] + 1)  # U[x, u]: u farther neighbour
        common = _imatmul(L, L.T)
        shared_up = _imatmul(U, U.T)
        bad = shared_up & ne & (dv[:, None] == dv[None, :]) & ~common
        w = _first(bad)
        if w:
            x, y = w
            u = int(np.flatnonzero(U[x] & U[y])[0])
            return _fail(v, x, y, u)
    return OK


def weakly_modular(m: MetricOracle) -> Check:
    r = tc(m)
    return r if not r else qc(m)


def _induced_pentagon(adj, x, x1, z, y1, y) -> bool:
    cyc = (x, x1, z, y1, y)
    for i in range(5):
        for j in range(i + 1, 5):
            a, b = cyc[i], cyc[j]
            if a == b:
                return False
            if adj[a, b] != ((j - i) in (1, 4)):
                return False
    return True


def tpc(m: MetricOracle) -> Check:
    """Triangle-pentagon condition; witness (v, x, y)."""
    d, adj = m.dist, m.adj
    n = m.n
    for v in range(n):
        dv = d[v]
        L = _closer_adj(m, v)
        common = _imatmul(L, L.T)
        cand = adj & (dv[:, None] == dv[None, :]) & (dv[:, None] > 0) & ~common
        for x, y in np.argwhere(cand):
            x, y = int(x), int(y)
            k = dv[x]
            ok = False
            zs = np.flatnonzero((dv == k - 2) & (d[x] == 2) & (d[y] == 2))
            for z in zs:
                for x1 in np.flatnonzero(adj[x] & adj[z]):
                    for y1 in np.flatnonzero(adj[y] & adj[z]):
                        if _induced_pentagon(adj, x, x1, z, y1, y):
                            ok = True
                            break
                    if ok:
                        break
                if ok:
                    break
            if not ok:
                return _fail(v, x, y)
    return OK


def inc(m: MetricOracle) -> Check:
    """Interval neighbourhood condition; witness (u, v, x, y)."""
    d, adj = m.dist, m.adj
    n = m.n
    for u in range(n):
        nb = np.flatnonzero(adj[u])
        for v in range(n):
            if v == u:
                continue
            # neighbours of u lying in I(u, v)
            inside = nb[d[nb, v] == d[u, v] - 1]
            sub = adj[np.ix_(inside, inside)] | np.eye(len(inside), dtype=bool)
            w = _first(~sub)
            if w:
                return _fail(u, v, inside[w[0]], inside[w[1]])
    return OK


def qc_minus(m: MetricOracle) -> Check:
    """For d(x,y)=2 some common neighbour z has 2d(v,z) <= d(v,x)+d(v,y); witness (v, x, y)."""
    d, adj = m.dist, m.adj
    two = d == 2
    for v in range(m.n):
        dv = d[v]
        for x, y in np.argwhere(two):
            zs = adj[x] & adj[y]
            if not (2 * dv[zs] <= dv[x] + dv[y]).any():
                return _fail(v, x, y)
    return OK


def aqc(m: MetricOracle) -> Check:
    """Almost quadrangle condition; witness (v, x, y, u)."""
    d, adj = m.dist, m.adj
    n = m.n
    for v in range(n):
        dv = d[v]
        for x in range(n):
            for y in range(n):
                if x == y or adj[x, y] or dv[x] != dv[y]:
                    continue
                ups = np.flatnonzero(adj[x] & adj[y] & (dv == dv[x] + 1))
                for u in ups:
                    # z in I(x, v) adjacent to x, w adjacent to u and z, square x z w u
                    zs = np.flatnonzero(adj[x] & (dv == dv[x] - 1))
                    found = False
                    for z in zs:
                        if adj[u, z]:
                            continue
                        ws = np.flatnonzero(adj[u] & adj[z])
                        if any(w != x and not adj[x, w] for w in ws):
                            found = True
                            break
                    if not found:
                        return _fail(v, x, y, u)
    return OK


# ------------------------------------------------------------ metric triangles


def metric_triangle(m: MetricOracle, x: int, y: int, z: int) -> bool:
    I = m.interval_mask
    for a, b, c in ((x, y, z), (y, x, z), (z, x, y)):
        common = I(a, b) & I(a, c)
        if common.sum() != 1:
            return False
    return True


def strongly_equilateral(m: MetricOracle, x: int, y: int, z: int) -> bool:
    """Every vertex of each side's interval is equidistant from the opposite corner."""
    d = m.dist
    for a, b, c in ((x, y, z), (y, x, z), (z, x, y)):
        side = m.interval_mask(b, c)
        if not (d[a][side] == d[a, b]).all():
            return False
    return True


@dataclass(frozen=True)
class MetricTriangleReport:
    triple: tuple
    sizes: tuple
    is_metric: bool
    is_equilateral: bool
    is_strongly_equilateral: bool


def triangle_report(m: MetricOracle, x: int, y: int, z: int) -> MetricTriangleReport:
    d = m.dist
    sizes = (int(d[x, y]), int(d[x, z]), int(d[y, z]))
    return MetricTriangleReport(
        (x, y, z), sizes, metric_triangle(m, x, y, z), len(set(sizes)) == 1, strongly_equilateral(m, x, y, z)
    )


def weakly_modular_equilateral(m: MetricOracle) -> Check:
    """Every metric triangle is strongly equilateral; witness (x, y, z)."""
    for x, y, z in itertools.product(range(m.n), repeat=3):
        if metric_triangle(m, x, y, z) and not strongly_equilateral(m, x, y, z):
            return _fail(x, y, z)
    return OK


def equilateral_triangles(m: MetricOracle) -> Check:
    """Diagnostic only: every metric triangle has equal sides."""
    d = m.dist
    for x, y, z in itertools.product(range(m.n), repeat=3):
        if metric_triangle(m, x, y, z) and not (d[x, y] == d[x, z] == d[y, z]):
            return _fail(x, y, z)
    return OK


def _furthest(m: MetricOracle, mask, src: int) -> int:
    cand = np.flatnonzero(mask)
    dd = m.dist[src][cand]
    return int(cand[np.flatnonzero(dd == dd.max())[0]])


def quasi_median(m: MetricOracle, x: int, y: int, z: int) -> tuple:
    """Furthest-point construction with least-index tie-breaking."""
    I = m.interval_mask
    x1 = _furthest(m, I(x, y) & I(x, z), x)
    y1 = _furthest(m, I(x1, y) & I(y, z), y)
    z1 = _furthest(m, I(x1, z) & I(y1, z), z)
    return (x1, y1, z1)


def medians(m: MetricOracle, x: int, y: int, z: int) -> frozenset:
    I = m.interval_mask
    return _set(I(x, y) & I(x, z) & I(y, z))


def modular_median(m: MetricOracle) -> Check:
    """Every triple has a median; witness (x, y, z)."""
    for x, y, z in itertools.product(range(m.n), repeat=3):
        if not medians(m, x, y, z):
            return _fail(x, y, z)
    return OK


def unique_medians(m: MetricOracle) -> Check:
    for x, y, z in itertools.product(range(m.n), repeat=3):
        if len(medians(m, x, y, z)) != 1:
            return _fail(x, y, z)
    return OK


def metric_triangles_trivial(m: MetricOracle, allow_triangles: bool = False) -> Check:
    """Metric triangles are single points (or triangles when allowed); witness (x, y, z)."""
    adj = m.adj
    for x, y, z in itertools.product(range(m.n), repeat=3):
        if x == y == z or not metric_triangle(m, x, y, z):
            continue
        if allow_triangles and adj[x, y] and adj[y, z] and adj[x, z]:
            continue
        return _fail(x, y, z)
    return OK


# ----------------------------------------------------------- bipartite, trees


def is_bipartite(m: MetricOracle) -> Check:
    """Witness (u, v, x): an edge uv whose ends are equidistant from x."""
    d = m.dist
    for u, v in np.argwhere(m.adj):
        eq = np.flatnonzero(d[u] == d[v])
        if len(eq):
            return _fail(u, v, eq[0])
    return OK


# ------------------------------------------------------------ halfspaces, Θ


@dataclass(frozen=True)
class HalfspaceDecomposition:
    edge: tuple
    W_uv: frozenset
    W_vu: frozenset
    W_eq: frozenset
    U_uv: frozenset
    U_vu: frozenset
    theta: frozenset


def _edge_check(m: MetricOracle, u: int, v: int):
    if not m.adj[u, v]:
        raise ValueError(f"{u}-{v} is not an edge")


def halfspace_masks(m: MetricOracle, u: int, v: int):
    d = m.dist
    return d[u] < d[v], d[v] < d[u], d[u] == d[v]


def halfspaces(m: MetricOracle, u: int, v: int) -> HalfspaceDecomposition:
    _edge_check(m, u, v)
    wuv, wvu, weq = halfspace_masks(m, u, v)
    uuv = wuv & (m.adj[:, wvu].any(axis=1))
    uvu = wvu & (m.adj[:, wuv].any(axis=1))
    return HalfspaceDecomposition(
        (u, v), _set(wuv), _set(wvu), _set(weq), _set(uuv), _set(uvu), frozenset(theta_class(m, u, v))
    )


def theta_related(m: MetricOracle, e, f) -> bool:
    """Djokovic-Winkler relation: d(x,u) + d(y,v) != d(x,v) + d(y,u)."""
    (x, y), (u, v) = e, f
    d = m.dist
    return bool(d[x, u] + d[y, v] != d[x, v] + d[y, u])


def theta_class(m: MetricOracle, u: int, v: int) -> list:
    d = m.dist
    return [(a, b) for a, b in m.graph.edges() if d[a, u] + d[b, v] != d[a, v] + d[b, u]]


@dataclass(frozen=True)
class NotTransitive:
    """Θ is not transitive: e Θ f and f Θ g but not e Θ g."""

    witness: tuple

    def __bool__(self):
        return False


def theta_classes(m: MetricOracle):
    """Θ-classes as sorted edge lists, or :class:`NotTransitive`."""
    edges = m.graph.edges()
    idx = {e: i for i, e in enumerate(edges)}
    k = len(edges)
    rel = np.zeros((k, k), dtype=bool)
    for i, e in enumerate(edges):
        for f in theta_class(m, *e):
            rel[i, idx[f]] = True
    # transitivity check: rel o rel subset rel
    comp = _imatmul(rel, rel)
    w = _first(comp & ~rel)
    if w:
        i, j = w
        mid = int(np.flatnonzero(rel[i] & rel[:, j])[0])
        return NotTransitive((edges[i], edges[mid], edges[j]))
    classes, seen = [], set()
    for i, e in enumerate(edges):
        if i in seen:
            continue
        members = [edges[j] for j in np.flatnonzero(rel[i])]
        seen.update(idx[f] for f in members)
        classes.append(sorted(members))
    return classes


def is_partial_cube(m: MetricOracle) -> Check:
    """Bipartite with convex halfspaces; witness (u, v) of a bad edge or bipartite witness."""
    b = is_bipartite(m)
    if not b:
        return b
    for u, v in np.argwhere(m.adj):
        if not is_convex(m, halfspace_masks(m, int(u), int(v))[0]):
            return _fail(u, v)
    return OK


def _require_partial_cube(m: MetricOracle):
    if not is_partial_cube(m):
        raise NotPartialCube("graph is not a partial cube")


def partial_hamming(m: MetricOracle) -> Check:
    """W(u,v), W(v,u), W=(u,v) and their complements are convex; witness (u, v)."""
    for u, v in np.argwhere(m.adj):
        wuv, wvu, weq = halfspace_masks(m, int(u), int(v))
        for s in (wuv, weq, ~wuv, ~weq):
            if not is_convex(m, s):
                return _fail(u, v)
    return OK


# ------------------------------------------------------------ interval shapes


def antipodal_interval(m: MetricOracle, u: int, v: int) -> bool:
    """Every x in I(u,v) has some y with I(x,y) = I(u,v)."""
    I = m.interval_mask
    target = I(u, v)
    d = m.dist
    for x in np.flatnonzero(target):
        ivs = d[x][None, :] + d == d[x][:, None]  # ivs[y, z]: z in I(x, y)
        if not (ivs == target[None, :]).all(axis=1).any():
            return False
    return True


def gated_set(m: MetricOracle, S) -> bool:
    """Each vertex x has a gate x' in S lying on a geodesic from x to every vertex of S."""
    s = np.flatnonzero(_mask(m, S))
    d = m.dist
    for x in range(m.n):
        ok = False
        for g in s:
            if (d[x, g] + d[g, s] == d[x, s]).all():
                ok = True
                break
        if not ok:
            return False
    return True


def gated_interval(m: MetricOracle, u: int, v: int) -> bool:
    return gated_set(m, m.interval_mask(u, v))


def cube_interval(m: MetricOracle, u: int, v: int) -> bool:
    """Triples of I(u,v) have medians in I(u,v); 2-intervals inside have two middles."""
    S = m.interval_mask(u, v)
    s = np.flatnonzero(S)
    I = m.interval_mask
    for x, y, z in itertools.product(s, repeat=3):
        if not (I(x, y) & I(x, z) & I(y, z) & S).any():
            return False
    adj = m.adj
    for x, y in itertools.product(s, repeat=2):
        if m.dist[x, y] == 2 and (adj[x] & adj[y]).sum() < 2:
            return False
    return True


def is_antipodal_graph(m: MetricOracle) -> Check:
    """Every x has y with I(x,y) = V; witness x."""
    d = m.dist
    for x in range(m.n):
        full = (d[x][None, :] + d == d[x][:, None]).all(axis=1)
        if not full.any():
            return _fail(x)
    return OK


def is_thick(m: MetricOracle) -> Check:
    """Each 2-interval contains a square; witness (u, v)."""
    adj = m.adj
    for u, v in np.argwhere(m.dist == 2):
        mid = np.flatnonzero(adj[u] & adj[v])
        sub = adj[np.ix_(mid, mid)] | np.eye(len(mid), dtype=bool)
        if sub.all():
            return _fail(u, v)
    return OK


def com_condition(m: MetricOracle) -> Check:
    """Antipodal intervals are gated; witness (u, v)."""
    for u, v in itertools.product(range(m.n), repeat=2):
        if antipodal_interval(m, u, v) and not gated_interval(m, u, v):
            return _fail(u, v)
    return OK


def ample_condition(m: MetricOracle) -> Check:
    """Antipodal intervals are cubes; witness (u, v)."""
    for u, v in itertools.product(range(m.n), repeat=2):
        if antipodal_interval(m, u, v) and not cube_interval(m, u, v):
            return _fail(u, v)
    return OK


# -------------------------------------------------------- separation axioms


def _between(m: MetricOracle) -> np.ndarray:
    return m.betweenness()  # T[u, x, v]: x in I(u, v)


def pasch(m: MetricOracle) -> Check:
    """x in I(u,w), y in I(v,w) imply I(u,y) and I(v,x) meet; witness (u, v, w, x, y)."""
    T = _between(m)
    n = m.n
    A = T.transpose(0, 2, 1).reshape(n * n, n)  # A[(a, b), z] = z in I(a, b)
    meet = _imatmul(A, A.T).reshape(n, n, n, n)  # meet[a, b, c, e]: I(a,b) meets I(c,e)
    Tt = T.transpose(0, 2, 1)
    for u in range(n):
        # bad[v, w, x, y] = T[u,x,w] & T[v,y,w] & ~meet[u,y,v,x]
        bad = T[u].T[None, :, :, None] & Tt[:, :, None, :] & ~meet[u].transpose(1, 2, 0)[:, None, :, :]
        w = _first(bad)
        if w:
            return _fail(u, *w)
    return OK


def peano(m: MetricOracle) -> Check:
    """x in I(v,w), y in I(u,x) give z in I(u,v) with y in I(w,z); witness (u, v, w, x, y)."""
    T = _between(m)
    n = m.n
    for u in range(n):
        # reach[v, w, y] = exists z: T[u, z, v] and T[w, y, z]
        reach = np.einsum("zv,wyz->vwy", T[u].astype(np.int32), T.astype(np.int32)) > 0
        # bad[v, w, x, y] = T[v, x, w] & T[u, y, x] & ~reach[v, w, y]
        bad = T.transpose(0, 2, 1)[:, :, :, None] & T[u].T[None, None, :, :] & ~reach[:, :, None, :]
        w = _first(bad)
        if w:
            return _fail(u, *w)
    return OK


def sand_glass(m: MetricOracle) -> Check:
    """y in I(u,u') and I(v,v'), x in I(u,v) give x' in I(u',v') with y in I(x,x');
    witness (u, v, u', v', x, y)."""
    T = _between(m)
    n = m.n
    Ti = T.astype(np.int32)
    # hit[u1, v1, x, y] = exists x1: T[u1, x1, v1] and T[x, y, x1]
    hit = np.einsum("akb,xyk->abxy", Ti, Ti) > 0
    for u in range(n):
        for v in range(n):
            xs = T[u, :, v]
            # bad[u1, v1, x, y] = T[u, y, u1] & T[v, y, v1] & xs[x] & ~hit
            bad = (T[u].T[:, None, None, :] & T[v].T[None, :, None, :]
                   & xs[None, None, :, None] & ~hit)
            w = _first(bad)
            if w:
                return _fail(u, v, *w)
    return OK


def convex_intervals(m: MetricOracle) -> Check:
    """Witness (u, v, x, y, z) with x, y in I(u,v), z in I(x,y) outside I(u,v)."""
    T = _between(m)
    n = m.n
    for u, v in itertools.product(range(n), repeat=2):
        s = T[u, :, v]
        # bad[x, y, z]
        bad = s[:, None, None] & s[None, :, None] & T.transpose(0, 2, 1) & ~s[None, None, :]
        w = _first(bad)
        if w:
            return _fail(u, v, *w)
    return OK


def interval_inclusion(m: MetricOracle, u: int, v: int, w: int) -> bool:
    """I(u,v) is covered by I(u,w) and I(v,w)."""
    I = m.interval_mask
    return bool(not (I(u, v) & ~(I(u, w) | I(v, w))).any())


def cellular(m: MetricOracle) -> Check:
    """Bipartite and I(u,v) + I(v,w) + I(w,u) convex for all triples; witness (u, v, w)."""
    b = is_bipartite(m)
    if not b:
        return b
    I = m.interval_mask
    for u, v, w in itertools.product(range(m.n), repeat=3):
        if not is_convex(m, I(u, v) | I(v, w) | I(w, u)):
            return _fail(u, v, w)
    return OK


# ---------------------------------------------------------- matroid family


def _posc_order(d, v, sq) -> tuple:
    """Orient a bad square so that its first vertex is extremal with respect to v."""
    w, x, y, z = sq
    for a, b, c, e in ((w, x, y, z), (x, y, z, w), (y, z, w, x), (z, w, x, y)):
        far = d[v, b] + 1 == d[v, a] == d[v, e] + 1 and not d[v, c] + 1 == d[v, b] == d[v, e]
        near = d[v, b] - 1 == d[v, a] == d[v, e] - 1 and not d[v, c] - 1 == d[v, b] == d[v, e]
        if far or near:
            return a, b, c, e
    return sq


def positioning_condition(m: MetricOracle) -> Check:
    """Squares wxyz satisfy d(v,w)+d(v,y) = d(v,x)+d(v,z); witness (v, w, x, y, z).

    The witness square starts at a corner whose two neighbours are both closer
    to (or both further from) v while the opposite corner is not.
    """
    d = m.dist
    for sq in _squares(m):
        w, x, y, z = sq
        bad = d[:, w] + d[:, y] != d[:, x] + d[:, z]
        if bad.any():
            v = int(np.flatnonzero(bad)[0])
            return _fail(v, *_posc_order(d, v, sq))
    return OK


def _squares(m: MetricOracle):
    """Induced 4-cycles w-x-y-z as ordered tuples (all rotations and directions)."""
    adj, n = m.adj, m.n
    out = []
    for w in range(n):
        for x in np.flatnonzero(adj[w]):
            for z in np.flatnonzero(adj[w]):
                if x == z or adj[x, z]:
                    continue
                for y in np.flatnonzero(adj[x] & adj[z]):
                    if y != w and not adj[w, y]:
                        out.append((w, int(x), int(y), int(z)))
    out.sort()
    return out


def _fixed_shapes():
    sq = nx.cycle_graph(4)
    pyramid = nx.wheel_graph(5)
    octa3 = nx.complement(nx.Graph([(0, 1), (2, 3), (4, 5)]))
    return sq, pyramid, octa3


def _interval_graph(m: MetricOracle, u: int, v: int) -> Graph:
    s = np.flatnonzero(m.interval_mask(u, v))
    return m.graph.induced(s)


def two_interval_condition_3(m: MetricOracle) -> Check:
    """2-intervals induce a square, a pyramid or a 3-octahedron; witness (u, v)."""
    shapes = _fixed_shapes()
    for u, v in np.argwhere(m.dist == 2):
        h = _interval_graph(m, u, v).to_networkx()
        if not any(nx.is_isomorphic(h, s) for s in shapes):
            return _fail(u, v)
    return OK


_K4X2 = None


def _octahedron4() -> Graph:
    global _K4X2
    if _K4X2 is None:
        a = ~np.eye(8, dtype=bool)
        for i in range(4):
            a[2 * i, 2 * i + 1] = a[2 * i + 1, 2 * i] = False
        _K4X2 = Graph(a, "K4x2")
    return _K4X2


def two_interval_condition_4(m: MetricOracle) -> Check:
    """2-intervals contain a square and embed (not necessarily induced) in K4x2; witness (u, v)."""
    from .families import cycle
    from .metric import build_metric

    c4 = cycle(4)
    k42 = build_metric(_octahedron4())
    for u, v in np.argwhere(m.dist == 2):
        h = _interval_graph(m, u, v)
        if find_induced(h, c4) is None or h.n > 8 or find_subgraph(k42, h) is None:
            return _fail(u, v)
    return OK


def is_line_graph(g: nx.Graph) -> bool:
    """Line-graph test per component via root-graph reconstruction."""
    for comp in nx.connected_components(g):
        h = g.subgraph(comp).copy()
        if h.number_of_edges() == 0:
            continue
        try:
            root = nx.inverse_line_graph(h)
        except nx.NetworkXError:
            return False
        if not nx.is_isomorphic(nx.line_graph(root), h):
            return False
    return True


def link_condition(m: MetricOracle) -> Check:
    """Every neighbourhood induces a line graph; witness (v,)."""
    g = m.graph.to_networkx()
    for v in range(m.n):
        if not is_line_graph(g.subgraph(list(g.neighbors(v)))):
            return _fail(v)
    return OK


# ------------------------------------------------------- boundaries (netlike)


def boundary_mask(m: MetricOracle, u: int, v: int) -> np.ndarray:
    """U(u,v): vertices of W(u,v) with a neighbour in W(v,u)."""
    wuv, wvu, _ = halfspace_masks(m, u, v)
    return wuv & m.adj[:, wvu].any(axis=1)


def _boundary_checked(m: MetricOracle, u: int, v: int) -> np.ndarray:
    _edge_check(m, u, v)
    _require_partial_cube(m)
    return boundary_mask(m, u, v)


def ph_stable_set(m: MetricOracle, A) -> bool:
    A = _mask(m, A)
    IA = np.flatnonzero(interval_union(m, A))
    a = np.flatnonzero(A)
    d = m.dist
    for x in IA:
        for y in IA:
            if not (d[x, y] + d[y, a] == d[x, a]).any():
                return False
    return True


def degree3_convex_set(m: MetricOracle, A) -> bool:
    A = _mask(m, A)
    IA = interval_union(m, A)
    deg = (m.adj & IA[None, :]).sum(axis=1)
    return bool(not (IA & (deg >= 3) & ~A).any())


def c_convex_set(m: MetricOracle, A) -> bool:
    """Vertices on cycles of the subgraph induced by I(A) lie in A."""
    A = _mask(m, A)
    IA = np.flatnonzero(interval_union(m, A))
    h = m.graph.induced(IA).to_networkx()
    on_cycle = set()
    for comp in nx.biconnected_components(h):
        if len(comp) >= 3:
            on_cycle |= comp
    return all(A[IA[i]] for i in on_cycle)


def ph_stable(m: MetricOracle, u: int, v: int) -> bool:
    return ph_stable_set(m, _boundary_checked(m, u, v))


def degree3_convex(m: MetricOracle, u: int, v: int) -> bool:
    return degree3_convex_set(m, _boundary_checked(m, u, v))


def boundary_connected(m: MetricOracle, u: int, v: int) -> bool:
    s = np.flatnonzero(_boundary_checked(m, u, v))
    return m.graph.induced(s).is_connected()


def boundary_isometric(m: MetricOracle, u: int, v: int) -> bool:
    s = np.flatnonzero(_boundary_checked(m, u, v))
    sub = _kernels.apsp(np.ascontiguousarray(m.adj[np.ix_(s, s)]))
    return bool(np.array_equal(sub, m.dist[np.ix_(s, s)]))


def netlike(m: MetricOracle) -> Check:
    """Partial cube whose boundaries are ph-stable and degree-3-convex; witness (u, v)."""
    pc = is_partial_cube(m)
    if not pc:
        return pc
    for u, v in np.argwhere(m.adj):
        A = boundary_mask(m, int(u), int(v))
        if not (ph_stable_set(m, A) and degree3_convex_set(m, A)):
            return _fail(u, v)
    return OK


def almost_median(m: MetricOracle) -> Check:
    """Partial cube with isometric boundaries; witness (u, v)."""
    pc = is_partial_cube(m)
    if not pc:
        return pc
    for u, v in np.argwhere(m.adj):
        if not boundary_isometric(m, int(u), int(v)):
            return _fail(u, v)
    return OK


# ------------------------------------------------------------ hyperbolicity


def distance_sums(m: MetricOracle, u: int, v: int, x: int, y: int) -> tuple:
    d = m.dist
    return tuple(sorted((int(d[u, v] + d[x, y]), int(d[u, x] + d[v, y]), int(d[u, y] + d[v, x]))))


def delta_star(m: MetricOracle, use_numba=None) -> Fraction:
    """Gromov hyperbolicity by the four-point condition, as a half-integer."""
    twice, _ = _kernels.four_point(m.dist, use_numba)
    return Fraction(twice, 2)


def delta_star_witness(m: MetricOracle, use_numba=None) -> tuple:
    return _kernels.four_point(m.dist, use_numba)[1]


def as_half_integer(delta) -> Fraction:
    f = Fraction(delta).limit_denominator(1000)
    if f < 0 or (2 * f).denominator != 1:
        from .errors import BadParams

        raise BadParams(f"delta must be a non-negative multiple of 1/2, got {delta}")
    return f


def interval_delta_slim(m: MetricOracle, delta) -> Check:
    """Each u in I(y,z) is within floor(delta) of I(x,y) + I(x,z); witness (x, y, z, u)."""
    k = int(as_half_integer(delta))
    d = m.dist
    T = m.betweenness()
    near = d <= k
    n = m.n
    for x in range(n):
        sides = T[x]  # sides[v, y]: v in I(x, y)
        # reach[y, u] = exists v in I(x, y) within k of u
        reach = _imatmul(sides.T, near)
        for y in range(n):
            # bad[z, u] = u in I(y,z) & not reach[y,u] & not reach[z,u]
            bad = T[y].T & ~reach[y][None, :] & ~reach
            w = _first(bad)
            if w:
                return _fail(x, y, *w)
    return OK


def alpha_i_check(m: MetricOracle, i: int) -> Check:
    """d(u,x) >= d(u,v) + d(v,w) + d(w,x) - i whenever v in I(u,w), w in I(v,x), v ~ w.

    Witness (u, v, w, x). Diagnostic; not tied to a class for i >= 2.
    """
    d = m.dist
    adj = m.adj
    for u, v, w, x in itertools.product(range(m.n), repeat=4):
        if adj[v, w] and d[u, v] + 1 == d[u, w] and 1 + d[w, x] == d[v, x]:
            if d[u, x] < d[u, v] + 1 + d[w, x] - i:
                return _fail(u, v, w, x)
    return OK


# --------------------------------------------------------- Helly conditions


def clique_helly(m: MetricOracle) -> Check:
    """For each triangle T the set T* of vertices adjacent to two of T has a
    vertex adjacent to all others of T*; witness (x, y, z)."""
    adj = m.adj
    n = m.n
    for x, y, z in itertools.product(range(n), repeat=3):
        if not (adj[x, y] and adj[y, z] and adj[x, z]):
            continue
        star = adj[[x, y, z]].sum(axis=0) >= 2
        ok = False
        for u in range(n):
            others = star.copy()
            others[u] = False
            if not (others & ~adj[u]).any():
                ok = True
                break
        if not ok:
            return _fail(x, y, z)
    return OK


def c4w4(m: MetricOracle) -> Check:
    """Every square has a vertex adjacent to all four; witness (w, x, y, z)."""
    adj = m.adj
    for w, x, y, z in _squares(m):
        if not (adj[w] & adj[x] & adj[y] & adj[z]).any():
            return _fail(w, x, y, z)
    return OK


def helly_condition_components(m: MetricOracle) -> dict:
    return {"clique_helly": clique_helly(m), "weakly_modular": weakly_modular(m), "c4w4": c4w4(m)}


# ------------------------------------------------- hereditary / chordal tools


def is_chordal(g) -> bool:
    """Perfect elimination order test. Not FOLB-definable; a plain utility."""
    if isinstance(g, MetricOracle):
        g = g.graph
    return nx.is_chordal(g.to_networkx())


def distance_hereditary_intervals(m: MetricOracle) -> Check:
    """Two of the three interval inclusions hold for every triple; witness (u, v, w)."""
    inc_ = interval_inclusion
    for u, v, w in itertools.product(range(m.n), repeat=3):
        a = inc_(m, u, v, w) and inc_(m, u, w, v)
        b = inc_(m, u, v, w) and inc_(m, v, w, u)
        c = inc_(m, u, w, v) and inc_(m, v, w, u)
        if not (a or b or c):
            return _fail(u, v, w)
    return OK


def alpha_zero_condition(m: MetricOracle) -> Check:
    """v ~ w, v in I(u,w), w in I(v,x) imply v, w in I(u,x); witness (u, v, w, x)."""
    d = m.dist
    adj = m.adj
    for u, v, w, x in itertools.product(range(m.n), repeat=4):
        if adj[v, w] and d[u, v] + 1 == d[u, w] and 1 + d[w, x] == d[v, x]:
            if d[u, x] != d[u, v] + 1 + d[w, x]:
                return _fail(u, v, w, x)
    return OK

"""Graph metric, betweenness oracle and the graphic-interval axiom checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .errors import DisconnectedGraph, DisconnectedPattern
from .graph import Graph

DENSE_LIMIT = 256


class MetricOracle:
    """All-pairs distances of a connected graph plus the derived B and E.

    ``B(u, x, v)`` holds iff ``d(u,x) + d(x,v) == d(u,v)``. Nothing of size n^3
    is kept unless the oracle was built with ``dense=True``.
    """

    def __init__(self, graph: Graph, dist: np.ndarray, dense: bool = False):
        self.graph = graph
        self.n = graph.n
        d = np.asarray(dist, dtype=np.int32)
        d.setflags(write=False)
        self.dist = d
        self._dense = None
        if dense:
            if self.n > DENSE_LIMIT:
                raise ValueError(f"dense betweenness cache limited to n <= {DENSE_LIMIT}")
            self._dense = self._tensor()
            self._dense.setflags(write=False)

    @property
    def adj(self) -> np.ndarray:
        return self.graph.adj

    def B(self, u: int, x: int, v: int) -> bool:
        if self._dense is not None:
            return bool(self._dense[u, x, v])
        d = self.dist
        return bool(d[u, x] + d[x, v] == d[u, v])

    def E(self, u: int, v: int) -> bool:
        return bool(self.dist[u, v] == 1)

    def _tensor(self) -> np.ndarray:
        d = self.dist
        return d[:, :, None] + d[None, :, :] == d[:, None, :]

    def betweenness(self) -> np.ndarray:
        """Boolean tensor ``T[u, x, v] = B(u, x, v)``; cached only when dense."""
        if self._dense is not None:
            return self._dense
        return self._tensor()

    def interval_mask(self, u: int, v: int) -> np.ndarray:
        d = self.dist
        return d[u] + d[v] == d[u, v]

    def interval(self, u: int, v: int) -> frozenset:
        return frozenset(int(x) for x in np.flatnonzero(self.interval_mask(u, v)))

    def diameter(self) -> int:
        return int(self.dist.max()) if self.n else 0

    def ball_mask(self, v: int, r: int) -> np.ndarray:
        return self.dist[v] <= r

    def __repr__(self):
        return f"<MetricOracle n={self.n} diam={self.diameter()}>"


def distances(g: Graph) -> np.ndarray:
    """Hop distances with ``-1`` for unreachable pairs."""
    return _kernels.apsp(np.ascontiguousarray(g.adj))


def build_metric(g: Graph, dense: bool = False) -> MetricOracle:
    d = distances(g)
    if (d < 0).any():
        u, v = (int(t) for t in np.argwhere(d < 0)[0])
        raise DisconnectedGraph(f"vertices {u} and {v} are not connected")
    return MetricOracle(g, d, dense=dense)


def interval(m: MetricOracle, u: int, v: int) -> frozenset:
    return m.interval(u, v)


# ------------------------------------------------------------ axioms IB1-IB7


@dataclass(frozen=True)
class TernaryRelation:
    """A candidate betweenness relation on ``0..m-1``; axioms are not enforced."""

    m: int
    triples: frozenset

    @classmethod
    def from_triples(cls, m: int, triples: Iterable[tuple[int, int, int]]) -> "TernaryRelation":
        ts = frozenset(tuple(int(t) for t in tr) for tr in triples)
        for tr in ts:
            if len(tr) != 3 or not all(0 <= t < m for t in tr):
                raise ValueError(f"triple {tr} out of range for universe size {m}")
        return cls(m, ts)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "TernaryRelation":
        arr = np.asarray(arr, dtype=bool)
        return cls(arr.shape[0], frozenset(tuple(int(t) for t in idx) for idx in np.argwhere(arr)))

    @classmethod
    def from_metric(cls, mo: MetricOracle) -> "TernaryRelation":
        return cls.from_array(mo.betweenness())

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.m, self.m, self.m), dtype=bool)
        if self.triples:
            idx = np.array(sorted(self.triples))
            a[idx[:, 0], idx[:, 1], idx[:, 2]] = True
        return a

    def __contains__(self, triple):
        return tuple(triple) in self.triples


def parse_relation(text: str) -> TernaryRelation:
    """Relation file: universe size ``m`` on the first line, then ``u v w`` triples."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise ValueError("relation file must start with the universe size")
    m = int(rows[0][0])
    return TernaryRelation.from_triples(m, (tuple(int(t) for t in r) for r in rows[1:]))


AXIOM_TAGS = ("IB1", "IB2", "IB3", "IB4", "IB5", "IB6", "IB7")


def _first_index(mask) -> Optional[tuple]:
    idx = np.argwhere(mask)
    return tuple(int(t) for t in idx[0]) if len(idx) else None


def check_axioms(r, use_numba=None) -> list[tuple[str, tuple]]:
    """Return ``[(tag, witness), ...]`` for each violated axiom.

    Witnesses are the lexicographically least falsifying assignments, ordered
    as the axiom's quantifier prefix. Accepts a ``TernaryRelation``, a boolean
    tensor, or a ``MetricOracle``.
    """
    if isinstance(r, MetricOracle):
        arr = r.betweenness()
    elif isinstance(r, TernaryRelation):
        arr = r.to_array()
    else:
        arr = np.asarray(r, dtype=bool)
    m = arr.shape[0]
    out = []
    if m == 0:
        return out
    u, v = np.ogrid[:m, :m]
    diag = arr[u, u, v]  # B(u,u,v) indexed [u, v]
    w = _first_index(~diag)
    if w:
        out.append(("IB1", w))
    u3, v3, x3 = np.ogrid[:m, :m, :m]
    w = _first_index(arr[u3, x3, v3] & ~arr[v3, x3, u3])
    if w:
        out.append(("IB2", w))
    ux = arr[u, v, u] & (u != v)  # [u, x]
    w = _first_index(ux)
    if w:
        out.append(("IB3", w))
    for k in (4, 5, 6, 7):
        w = _kernels.axiom_witness(arr, k, use_numba)
        if w:
            out.append((f"IB{k}", w))
    return out


def edge_relation(arr: np.ndarray) -> np.ndarray:
    """E_B derived from a betweenness tensor."""
    return _kernels.edges_of_relation(np.asarray(arr, dtype=bool))


# --------------------------------------------------------- subgraph searches


def _pattern_dist(h: Graph) -> np.ndarray:
    return _kernels.apsp(np.ascontiguousarray(h.adj))


def _target(g):
    if isinstance(g, MetricOracle):
        return g.graph, g.dist
    return g, build_metric(g).dist


def find_induced(g, h: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least induced embedding of ``h`` into ``g``.

    Returns ``f`` with ``f[i]`` the image of pattern vertex ``i``.
    """
    gg, gd = _target(g)
    return _kernels.embed(gg.adj, gd, h.adj, _pattern_dist(h), isometric=False)


def find_isometric(g, h: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least distance-preserving embedding of ``h`` into ``g``."""
    hd = _pattern_dist(h)
    if (hd < 0).any():
        raise DisconnectedPattern("isometric search needs a connected pattern")
    gg, gd = _target(g)
    return _kernels.embed(gg.adj, gd, h.adj, hd, isometric=True)


def find_subgraph(g, h: Graph) -> Optional[tuple[int, ...]]:
    """Injective homomorphism (not necessarily induced); plain backtracking."""
    gg, _ = _target(g)
    ga = gg.adj
    p = h.n
    hn = [[j for j in range(i) if h.adj[i, j]] for i in range(p)]
    f: list[int] = []
    used = set()

    def rec(i):
        if i == p:
            return True
        for c in range(gg.n):
            if c in used or not all(ga[c, f[j]] for j in hn[i]):
                continue
            f.append(c)
            used.add(c)
            if rec(i + 1):
                return True
            f.pop()
            used.discard(c)
        return False

    return tuple(f) if rec(0) else None

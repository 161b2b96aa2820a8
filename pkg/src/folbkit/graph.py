"""Finite simple undirected graphs with stable integer vertex labels."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Optional

import networkx as nx
import numpy as np

from .errors import GraphFormatError


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Connectivity is not enforced here because patterns handed to the subgraph
    searches may be disconnected; metric construction rejects such graphs.
    """

    __slots__ = ("n", "adj", "name", "_edges")

    def __init__(self, adj, name: Optional[str] = None):
        a = np.array(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphFormatError("adjacency must be a square matrix")
        if not np.array_equal(a, a.T):
            raise GraphFormatError("adjacency must be symmetric")
        if a.diagonal().any():
            raise GraphFormatError("self-loops are not allowed")
        a.setflags(write=False)
        self.n = a.shape[0]
        self.adj = a
        self.name = name
        self._edges = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name=None) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            a[u, v] = a[v, u] = True
        return cls(a, name)

    @classmethod
    def from_networkx(cls, g: nx.Graph, name=None) -> "Graph":
        """Relabel ``g``'s nodes to 0..n-1 in sorted order when sortable."""
        nodes = list(g.nodes())
        try:
            nodes = sorted(nodes)
        except TypeError:
            pass
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()), name)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            us, vs = np.nonzero(np.triu(self.adj))
            self._edges = [(int(u), int(v)) for u, v in zip(us, vs)]
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = seen.copy()
        while frontier.any():
            frontier = self.adj[frontier].any(axis=0) & ~seen
            seen |= frontier
        return bool(seen.all())

    def relabel(self, perm) -> "Graph":
        """Graph whose vertex ``perm[i]`` plays the role of old vertex ``i``."""
        perm = np.asarray(perm)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        return Graph(self.adj[np.ix_(inv, inv)], self.name)

    def induced(self, vertices) -> "Graph":
        vs = list(vertices)
        return Graph(self.adj[np.ix_(vs, vs)])

    def add_universal_vertex(self, name=None) -> "Graph":
        a = np.zeros((self.n + 1, self.n + 1), dtype=bool)
        a[: self.n, : self.n] = self.adj
        a[self.n, : self.n] = a[: self.n, self.n] = True
        return Graph(a, name)

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


# ------------------------------------------------------------------ text I/O


def dumps(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            yield s


def loads(text: str, name=None) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = set()
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphFormatError(f"duplicate edge {key}")
        edges.add(key)
    return Graph.from_edges(n, sorted(edges), name)


def loads_many(text: str) -> list[Graph]:
    """Parse a concatenation of graph records (each starting with ``n m``)."""
    lines = list(_content_lines(text))
    out = []
    i = 0
    while i < len(lines):
        n, m = (int(t) for t in lines[i].split())
        out.append(loads("\n".join(lines[i : i + m + 1])))
        i += m + 1
    return out


def read(path) -> Graph:
    p = Path(path)
    return loads(p.read_text(), name=p.stem)


def write(g: Graph, path, comment=None) -> None:
    Path(path).write_text(dumps(g, comment))


_SPEC_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_*]*)\s*\((.*)\)\s*$")


def is_family_spec(source: str) -> bool:
    return bool(_SPEC_RE.match(source)) and not Path(source).exists()


def load_graph(source: str) -> Graph:
    """Load from a file path or a ``family(args)`` expression."""
    if is_family_spec(source):
        from . import families

        return families.generate_from_spec(source)
    try:
        return read(source)
    except FileNotFoundError:
        raise GraphFormatError(f"no such graph file or family spec: {source!r}") from None

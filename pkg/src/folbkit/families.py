"""Deterministic generators for the named graphs.

Canonical labelings:

* ``hypercube(m)``: vertex ``i`` is the subset with bitmask ``i``.
* ``halved_cube(m)``: even-weight bitmasks in increasing order.
* ``johnson(m, k)``: k-subsets of ``range(m)`` in colex order.
* ``hamming(m1, ..., md)``: tuples in lexicographic order, last coordinate fastest.
* ``octahedron(n)``: vertices ``2i`` and ``2i+1`` form the i-th non-adjacent pair.
* ``wheel(k)`` / ``almost_wheel(k)``: centre 0, rim ``1..k`` in cyclic order;
  the almost wheel drops the spoke ``0-1``.
* ``grid(p, q)``: vertex ``i*q + j``.
* Coned constructions put the base graph first and the apex vertices last.
"""

from __future__ import annotations

import ast
import hashlib
import itertools
import re
from dataclasses import dataclass
from importlib import resources
from typing import Callable

import networkx as nx
import numpy as np

from .errors import BadParams, MissingData
from .graph import Graph, loads_many


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    def __str__(self):
        return f"{self.family}({', '.join(str(p) for p in self.params)})"


def _need(cond, msg):
    if not cond:
        raise BadParams(msg)


def _int(x, name):
    _need(isinstance(x, (int, np.integer)) and not isinstance(x, bool), f"{name} must be an integer, got {x!r}")
    return int(x)


def _from_pairs(n, pairs, name):
    return Graph.from_edges(n, pairs, name)


# --------------------------------------------------------------- basic graphs


def complete(n):
    n = _int(n, "n")
    _need(n >= 1, "complete(n) needs n >= 1")
    return _from_pairs(n, itertools.combinations(range(n), 2), f"K{n}")


def complete_bipartite(a, b):
    a, b = _int(a, "a"), _int(b, "b")
    _need(a >= 1 and b >= 1, "complete_bipartite(a, b) needs a, b >= 1")
    return _from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def k4_minus():
    return _from_pairs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], "K4-")


def k33_minus():
    pairs = [(i, 3 + j) for i in range(3) for j in range(3) if (i, j) != (0, 0)]
    return _from_pairs(6, pairs, "K3,3-")


def path(n):
    n = _int(n, "n")
    _need(n >= 1, "path(n) needs n >= 1")
    return _from_pairs(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n):
    n = _int(n, "n")
    _need(n >= 3, "cycle(n) needs n >= 3")
    return _from_pairs(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def tree(n, seed=0):
    """Uniform random labelled tree from a seeded Pruefer sequence."""
    n, seed = _int(n, "n"), _int(seed, "seed")
    _need(n >= 1, "tree(n) needs n >= 1")
    if n <= 2:
        return path(n)
    rng = np.random.default_rng(seed)
    seq = [int(t) for t in rng.integers(0, n, size=n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(seq), f"tree({n},{seed})")


def star(k):
    k = _int(k, "k")
    _need(k >= 0, "star(k) needs k >= 0")
    return _from_pairs(k + 1, [(0, i) for i in range(1, k + 1)], f"star({k})")


def caterpillar(spine, legs):
    spine, legs = _int(spine, "spine"), _int(legs, "legs")
    _need(spine >= 1 and legs >= 0, "caterpillar(spine, legs) needs spine >= 1, legs >= 0")
    pairs = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        for _ in range(legs):
            pairs.append((i, nxt))
            nxt += 1
    return _from_pairs(nxt, pairs, f"caterpillar({spine},{legs})")


def hypercube(m):
    m = _int(m, "m")
    _need(0 <= m <= 16, "hypercube(m) needs 0 <= m <= 16")
    n = 1 << m
    pairs = [(v, v ^ (1 << b)) for v in range(n) for b in range(m) if v < v ^ (1 << b)]
    return _from_pairs(n, pairs, f"Q{m}")


def halved_cube(m):
    m = _int(m, "m")
    _need(1 <= m <= 16, "halved_cube(m) needs 1 <= m <= 16")
    verts = [v for v in range(1 << m) if bin(v).count("1") % 2 == 0]
    idx = {v: i for i, v in enumerate(verts)}
    pairs = [(idx[a], idx[b]) for a, b in itertools.combinations(verts, 2) if bin(a ^ b).count("1") == 2]
    return _from_pairs(len(verts), pairs, f"halfQ{m}")


def johnson(m, k):
    m, k = _int(m, "m"), _int(k, "k")
    _need(0 <= k <= m, "johnson(m, k) needs 0 <= k <= m")
    subsets = sorted(itertools.combinations(range(m), k), key=lambda s: tuple(reversed(s)))
    sets = [frozenset(s) for s in subsets]
    pairs = [(i, j) for i, j in itertools.combinations(range(len(sets)), 2) if len(sets[i] ^ sets[j]) == 2]
    return _from_pairs(len(sets), pairs, f"J({m},{k})")


def hamming(*ms):
    _need(len(ms) >= 1, "hamming needs at least one factor")
    ms = tuple(_int(x, "m_i") for x in ms)
    _need(all(x >= 1 for x in ms), "hamming factors must be >= 1")
    verts = list(itertools.product(*(range(x) for x in ms)))
    pairs = [
        (i, j)
        for i, j in itertools.combinations(range(len(verts)), 2)
        if sum(a != b for a, b in zip(verts[i], verts[j])) == 1
    ]
    return _from_pairs(len(verts), pairs, "H" + ",".join(map(str, ms)))


def octahedron(n):
    n = _int(n, "n")
    _need(n >= 2, "octahedron(n) needs n >= 2 (n = 1 is disconnected)")
    pairs = [(i, j) for i, j in itertools.combinations(range(2 * n), 2) if i // 2 != j // 2]
    return _from_pairs(2 * n, pairs, f"K{n}x2")


def wheel(k):
    k = _int(k, "k")
    _need(k >= 3, "wheel(k) needs k >= 3")
    pairs = [(0, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)]
    return _from_pairs(k + 1, pairs, f"W{k}")


def almost_wheel(k):
    k = _int(k, "k")
    _need(k >= 3, "almost_wheel(k) needs k >= 3")
    pairs = [(0, i) for i in range(2, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)]
    return _from_pairs(k + 1, pairs, f"W{k}-")


def fan3():
    """Path 1-2-3-4 plus the universal vertex 0."""
    return _from_pairs(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)], "3F")


def house():
    """Square 0-1-2-3 with roof vertex 4 over the edge 0-1."""
    return _from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)], "house")


def domino():
    return Graph(grid(2, 3).adj, "domino")


def pyramid():
    """Apex 0 over the square 1-2-3-4 (the 4-wheel)."""
    return Graph(wheel(4).adj, "pyramid")


def grid(p, q):
    p, q = _int(p, "p"), _int(q, "q")
    _need(p >= 1 and q >= 1, "grid(p, q) needs p, q >= 1")
    pairs = []
    for i in range(p):
        for j in range(q):
            v = i * q + j
            if j + 1 < q:
                pairs.append((v, v + 1))
            if i + 1 < p:
                pairs.append((v, v + q))
    return _from_pairs(p * q, pairs, f"grid({p},{q})")


def wheel_plus_vertex():
    """4-wheel (centre 0, rim 1-2-3-4) plus vertex 5 adjacent to rim vertices 1 and 2.

    Its geodesic convexity satisfies the Pasch axiom but not the Peano axiom.
    """
    g = wheel(4)
    return _from_pairs(6, g.edges() + [(1, 5), (2, 5)], "W4+v")


# ----------------------------------------------------- coned fixture pairs


def _cone(n, pairs, apexes, name, apex_adjacent=False):
    allp = list(pairs)
    for a in range(apexes):
        allp.extend((v, n + a) for v in range(n))
    if apex_adjacent and apexes == 2:
        allp.append((n, n + 1))
    return _from_pairs(n + apexes, allp, name)


def _path_pairs(start, length):
    return [(start + i, start + i + 1) for i in range(length - 1)]


def _cycle_pairs(start, length):
    return [(start + i, start + (i + 1) % length) for i in range(length)]


def _check_d(d, lo=2):
    d = _int(d, "d")
    _need(d >= lo, f"d must be >= {lo}")
    return d


def chordal_a_star(d):
    """Path on 4d vertices coned by one apex (chordal)."""
    d = _check_d(d)
    return _cone(4 * d, _path_pairs(0, 4 * d), 1, f"chordal_A*({d})")


def chordal_b_star(d):
    """Path on 2d vertices plus a 2d-cycle, coned by one apex (not chordal)."""
    d = _check_d(d)
    return _cone(4 * d, _path_pairs(0, 2 * d) + _cycle_pairs(2 * d, 2 * d), 1, f"chordal_B*({d})")


def dism_a_star(d):
    d = _check_d(d)
    return _cone(4 * d, _path_pairs(0, 4 * d), 2, f"dism_A*({d})")


def dism_b_star(d):
    d = _check_d(d)
    return _cone(4 * d, _path_pairs(0, 2 * d) + _cycle_pairs(2 * d, 2 * d), 2, f"dism_B*({d})")


def johnson_a_star(d):
    """2d-cycle coned by one apex."""
    d = _check_d(d, 3)
    _need(d % 2 == 1, "johnson fixtures need odd d (the B side uses two d-cycles)")
    return _cone(2 * d, _cycle_pairs(0, 2 * d), 1, f"johnson_A*({d})")


def johnson_b_star(d):
    """Two disjoint odd d-cycles coned by one apex."""
    d = _check_d(d, 3)
    _need(d % 2 == 1, "johnson fixtures need odd d (the B side uses two d-cycles)")
    return _cone(2 * d, _cycle_pairs(0, d) + _cycle_pairs(d, d), 1, f"johnson_B*({d})")


def euler_a_star(r):
    """K_{2,2r}: stable set 0..2r-1 and two non-adjacent apexes."""
    r = _int(r, "r")
    _need(r >= 1, "r must be >= 1")
    return _cone(2 * r, [], 2, f"euler_A*({r})")


def euler_b_star(r):
    r = _int(r, "r")
    _need(r >= 1, "r must be >= 1")
    return _cone(2 * r + 1, [], 2, f"euler_B*({r})")


def dpo_a_star():
    raise MissingData("the DPO fixture graphs are not bundled")


def dpo_b_star():
    raise MissingData("the DPO fixture graphs are not bundled")


FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "k4_minus": k4_minus,
    "k33_minus": k33_minus,
    "path": path,
    "cycle": cycle,
    "tree": tree,
    "star": star,
    "caterpillar": caterpillar,
    "hypercube": hypercube,
    "halved_cube": halved_cube,
    "johnson": johnson,
    "hamming": hamming,
    "octahedron": octahedron,
    "wheel": wheel,
    "almost_wheel": almost_wheel,
    "fan3": fan3,
    "house": house,
    "domino": domino,
    "pyramid": pyramid,
    "grid": grid,
    "wheel_plus_vertex": wheel_plus_vertex,
    "chordal_A*": chordal_a_star,
    "chordal_B*": chordal_b_star,
    "dism_A*": dism_a_star,
    "dism_B*": dism_b_star,
    "johnson_A*": johnson_a_star,
    "johnson_B*": johnson_b_star,
    "euler_A*": euler_a_star,
    "euler_B*": euler_b_star,
    "dpo_A*": dpo_a_star,
    "dpo_B*": dpo_b_star,
}

ALIASES = {
    "k": "complete",
    "kn": "complete",
    "knm": "complete_bipartite",
    "k4m": "k4_minus",
    "k33m": "k33_minus",
    "q": "hypercube",
    "cube": "hypercube",
    "halfcube": "halved_cube",
    "fan": "fan3",
    "3fan": "fan3",
}


def _canonical(name: str) -> str:
    if name in FAMILIES:
        return name
    low = name.lower()
    for key in FAMILIES:
        if key.lower() == low or key.lower().replace("*", "_star") == low:
            return key
    if low in ALIASES:
        return ALIASES[low]
    raise BadParams(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")


def generate(spec, *params) -> Graph:
    """Build a graph from a ``FamilySpec`` or a family name plus parameters."""
    if isinstance(spec, FamilySpec):
        name, params = spec.family, spec.params
    else:
        name = spec
    fn = FAMILIES[_canonical(name)]
    try:
        g = fn(*params)
    except TypeError as exc:
        raise BadParams(f"{name}: {exc}") from None
    return g


_SPEC = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_*]*)\s*\((.*)\)\s*$")


def parse_spec(text: str) -> FamilySpec:
    m = _SPEC.match(text)
    if not m:
        raise BadParams(f"not a family spec: {text!r}")
    args = m.group(2).strip()
    params: tuple = ()
    if args:
        try:
            val = ast.literal_eval(f"({args},)")
        except (ValueError, SyntaxError):
            raise BadParams(f"bad parameters in {text!r}") from None
        params = tuple(val)
    return FamilySpec(_canonical(m.group(1)), params)


def generate_from_spec(text: str) -> Graph:
    spec = parse_spec(text)
    g = generate(spec)
    return Graph(g.adj, str(spec) if g.name is None else g.name)


# ----------------------------------------------------------- forbidden lists

LIST_FILES = {
    "pseudo_median_H": "pseudo_median_H.graphs",
    "beineke_F": "beineke_F.graphs",
    "half_hyperbolic_H": "half_hyperbolic_H.graphs",
}
LIST_NAMES = ("pseudo_median_H", "beineke_F", "beineke_F_primed", "half_hyperbolic_H")


def body_checksum(graphs) -> str:
    """sha256 over the canonical text of a list of graphs."""
    from .graph import dumps

    h = hashlib.sha256()
    for g in graphs:
        h.update(dumps(g).encode())
    return h.hexdigest()


def _read_list(name: str) -> list[Graph]:
    return _read_list_meta(name)[0]


def list_metadata(name: str) -> dict:
    """Header fields (``# key: value``) of a bundled list file."""
    return _read_list_meta(name)[1]


def _read_list_meta(name: str):
    fname = LIST_FILES[name]
    try:
        text = resources.files("folbkit.data").joinpath(fname).read_text()
    except (FileNotFoundError, OSError):
        raise MissingData(f"data file {fname} for list {name!r} is not bundled") from None
    meta = {}
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#") and ":" in s:
            k, _, v = s[1:].partition(":")
            meta[k.strip()] = v.strip()
    graphs = loads_many(text)
    if "count" in meta and int(meta["count"]) != len(graphs):
        raise MissingData(f"{fname}: expected {meta['count']} graphs, found {len(graphs)}")
    if "sizes" in meta:
        sizes = " ".join(f"{g.n}/{g.m}" for g in graphs)
        if sizes != meta["sizes"]:
            raise MissingData(f"{fname}: vertex/edge counts {sizes} differ from recorded {meta['sizes']}")
    if "sha256" in meta and meta["sha256"] != body_checksum(graphs):
        raise MissingData(f"{fname}: checksum mismatch")
    return [Graph(g.adj, f"{name}[{i}]") for i, g in enumerate(graphs)], meta


def forbidden_list(name: str) -> list[Graph]:
    if name not in LIST_NAMES:
        raise BadParams(f"unknown list {name!r}; known: {', '.join(LIST_NAMES)}")
    if name == "beineke_F_primed":
        return [g.add_universal_vertex(f"beineke_F_primed[{i}]") for i, g in enumerate(_read_list("beineke_F"))]
    return _read_list(name)


def has_list(name: str) -> bool:
    try:
        forbidden_list(name)
    except MissingData:
        return False
    return True


def alpha_one_pattern() -> Graph:
    """The member of the half-hyperbolic list singled out for alpha_1-metric graphs."""
    graphs, meta = _read_list_meta("half_hyperbolic_H")
    if "hc_index" not in meta:
        raise MissingData("half_hyperbolic_H.graphs does not record hc_index")
    g = graphs[int(meta["hc_index"])]
    return Graph(g.adj, "H_c")

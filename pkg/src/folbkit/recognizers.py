"""Class catalog: every FOLB-definable class with a prelude sentence and a
direct decision procedure built from :mod:`folbkit.predicates` and subgraph
searches.

A class is a conjunction of leaf conjuncts. ``recognize`` evaluates the
leaves in order and reports the first one that fails, with its witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import networkx as nx
import numpy as np

from . import families
from . import predicates as P
from .errors import BadParams, MissingData
from .graph import Graph
from .metric import MetricOracle, build_metric, find_induced, find_isometric

# ------------------------------------------------------------------ verdicts


@dataclass(frozen=True)
class Verdict:
    value: Optional[bool]  # None means not available
    witness: tuple = ()
    conjunct: Optional[str] = None
    reason: Optional[str] = None

    @property
    def label(self) -> str:
        return "na" if self.value is None else ("true" if self.value else "false")

    @property
    def available(self) -> bool:
        return self.value is not None

    def __bool__(self):
        return bool(self.value)

    def witness_text(self) -> str:
        if self.value is None:
            return self.reason or ""
        if self.value:
            return ""
        return f"{self.conjunct}:{','.join(map(str, self.witness))}"


TRUE = Verdict(True)


# ------------------------------------------------------------------ conjuncts


@dataclass(frozen=True)
class Conjunct:
    """One leaf of a direct checker.

    ``check`` returns a :class:`predicates.Check`. A failing witness can be
    confirmed independently: ``macro`` names a prelude formula whose
    parameters (or leading universal variables) take the witness in order,
    ``formula`` is ``(text, variables)`` for an ad hoc one, and ``recheck``
    is a plain function ``(m, witness) -> bool``.
    """

    name: str
    check: Callable[[MetricOracle], P.Check]
    macro: Optional[str] = None
    requires: tuple = ()
    pattern: Optional[Callable[[], Graph]] = None
    mode: Optional[str] = None  # "induced" / "isometric" for pattern leaves
    formula: Optional[tuple] = None
    recheck: Optional[Callable] = None


def pred(name, fn, macro=None, formula=None, recheck=None) -> Conjunct:
    return Conjunct(name, fn, macro, formula=formula, recheck=recheck)


def _forbid(name, make, mode) -> Conjunct:
    find = find_induced if mode == "induced" else find_isometric

    def check(m):
        f = find(m, make())
        return P.OK if f is None else P.Check(False, tuple(f))

    return Conjunct(f"{mode}_{name}", check, pattern=make, mode=mode)


def induced(name, make) -> Conjunct:
    return _forbid(name, make, "induced")


def isometric(name, make) -> Conjunct:
    return _forbid(name, make, "isometric")


def forbid_list(list_name, mode) -> Conjunct:
    find = find_induced if mode == "induced" else find_isometric

    def check(m):
        for h in families.forbidden_list(list_name):
            f = find(m, h)
            if f is not None:
                return P.Check(False, tuple(f))
        return P.OK

    return Conjunct(f"{mode}_{list_name}", check, requires=(list_name,), mode=mode)


def embeds(m: MetricOracle, h: Graph, f, mode: str) -> bool:
    """Is ``f`` an induced (or distance-preserving) embedding of ``h``?"""
    f = list(f)
    if len(f) != h.n or len(set(f)) != h.n:
        return False
    if mode == "induced":
        return bool(np.array_equal(m.adj[np.ix_(f, f)], h.adj))
    return bool(np.array_equal(m.dist[np.ix_(f, f)], build_metric(h).dist))


# --------------------------------------------------- direct-only procedures


def tree_check(m: MetricOracle) -> P.Check:
    """Acyclic; witness a cycle (as a vertex tuple)."""
    if m.graph.m == m.n - 1:
        return P.OK
    cyc = nx.find_cycle(m.graph.to_networkx())
    return P.Check(False, tuple(int(u) for u, _ in cyc))


def block_check(m: MetricOracle) -> P.Check:
    """Every 2-connected block is complete; witness a non-adjacent pair in one block."""
    g = m.graph.to_networkx()
    for block in nx.biconnected_components(g):
        vs = sorted(block)
        for u, v in itertools.combinations(vs, 2):
            if not m.adj[u, v]:
                return P.Check(False, (u, v))
    return P.OK


def four_point_dh(m: MetricOracle) -> P.Check:
    """Among the three distance sums two are equal, and the largest exceeds
    the two equal smallest ones by at most 2; witness (u, v, x, y)."""
    d = m.dist
    for u, v, x, y in itertools.combinations(range(m.n), 4):
        s = sorted((d[u, v] + d[x, y], d[u, x] + d[v, y], d[u, y] + d[v, x]))
        if s[0] != s[1] and s[1] != s[2]:
            return P.Check(False, (u, v, x, y))
        if s[0] == s[1] and s[2] - s[1] > 2:
            return P.Check(False, (u, v, x, y))
    return P.OK


def ptolemy(m: MetricOracle) -> P.Check:
    """d(u,v)d(x,y) <= d(u,x)d(v,y) + d(u,y)d(v,x); witness (u, v, x, y)."""
    d = m.dist.astype(np.int64)
    lhs = d[:, :, None, None] * d[None, None, :, :]
    rhs = d[:, None, :, None] * d[None, :, None, :] + d[:, None, None, :] * d[None, :, :, None]
    bad = lhs > rhs
    if bad.any():
        return P.Check(False, tuple(int(i) for i in np.argwhere(bad)[0]))
    return P.OK


def half_hyperbolic_check(m: MetricOracle) -> P.Check:
    """Four-point hyperbolicity at most 1/2; witness the extremal quadruple."""
    if P.delta_star(m) <= Fraction(1, 2):
        return P.OK
    return P.Check(False, tuple(int(i) for i in P.delta_star_witness(m)))


def alpha_one_check(m: MetricOracle) -> P.Check:
    return P.alpha_i_check(m, 1)


def _is_cycle(m, w) -> bool:
    return len(w) >= 3 and len(set(w)) == len(w) and all(m.adj[w[i - 1], w[i]] for i in range(len(w)))


def _same_block(m, w) -> bool:
    u, v = w
    blocks = nx.biconnected_components(m.graph.to_networkx())
    return not m.adj[u, v] and any(u in b and v in b for b in blocks)


def _sums(m, w):
    u, v, x, y = w
    d = m.dist
    return sorted((int(d[u, v] + d[x, y]), int(d[u, x] + d[v, y]), int(d[u, y] + d[v, x])))


def _bad_four_point(m, w) -> bool:
    s = _sums(m, w)
    return (s[0] != s[1] and s[1] != s[2]) or (s[0] == s[1] and s[2] - s[1] > 2)


def _bad_ptolemy(m, w) -> bool:
    u, v, x, y = w
    d = m.dist
    return d[u, v] * d[x, y] > d[u, x] * d[v, y] + d[u, y] * d[v, x]


def _bad_half(m, w) -> bool:
    s = _sums(m, w)
    return s[2] - s[1] > 1


def _bad_alpha_one(m, w) -> bool:
    u, v, w_, x = w
    d = m.dist
    return bool(
        m.adj[v, w_] and d[u, v] + 1 == d[u, w_] and 1 + d[w_, x] == d[v, x] and d[u, x] < d[u, v] + d[w_, x]
    )


def _bad_qc_minus(m, w) -> bool:
    v, x, y = w
    d = m.dist
    zs = m.adj[x] & m.adj[y]
    return d[x, y] == 2 and not (2 * d[v][zs] <= d[v, x] + d[v, y]).any()


def _bad_link(m, w) -> bool:
    g = m.graph.to_networkx()
    return not P.is_line_graph(g.subgraph(list(g.neighbors(w[0]))))


def _bad_cellular(m, w) -> bool:
    u, v, x = w
    I = m.interval_mask
    return not P.is_convex(m, I(u, v) | I(v, x) | I(x, u))


def _bad_boundary(m, w) -> bool:
    return bool(m.adj[w[0], w[1]]) and not P.boundary_isometric(m, *w)


# ------------------------------------------------------------------ registry


@dataclass(frozen=True)
class ClassSpec:
    class_id: str
    sentence: str
    conjuncts: tuple
    description: str = ""
    requires: tuple = field(default=())


# shared leaves
TC = pred("tc", P.tc, "tc")
QC = pred("qc", P.qc, "qc")
BIP = pred("bipartite", P.is_bipartite, "bipartite")
TPC = pred("tpc", P.tpc, "tpc")
INC = pred("inc", P.inc, "inc")
HALFSPACES = pred("convex_halfspaces", P.is_partial_cube, formula=("E(u,v) -> convw(u,v)", ("u", "v")))
PC = (BIP, HALFSPACES)
PASCH = pred("pasch", P.pasch, "pasch")
PEANO = pred("peano", P.peano, "peano")
NO_K4M = induced("k4m", families.k4_minus)
NO_K23 = induced("k23", lambda: families.complete_bipartite(2, 3))
NO_C4 = induced("c4", lambda: families.cycle(4))
NO_C5 = induced("c5", lambda: families.cycle(5))
ISO_K4M = isometric("k4m", families.k4_minus)
ISO_K33M = isometric("k33m", families.k33_minus)
NO_FPRIME = forbid_list("beineke_F_primed", "induced")
NO_PMH = forbid_list("pseudo_median_H", "induced")

WM = (TC, QC)
MODULAR = (BIP,) + WM
COM = PC + (pred("com", P.com_condition, formula=("antipodal_uv(u,v) -> gated_uv(u,v)", ("u", "v"))),)
DH = (pred("distance_hereditary", four_point_dh, recheck=_bad_four_point),)
PTOLEMAIC = (pred("ptolemaic", ptolemy, recheck=_bad_ptolemy),)
CONVEX_BALLS = (TPC, INC)

_SPECS = [
    ClassSpec("bipartite", "bipartite", (BIP,), "every edge has ends at different distance from any vertex"),
    ClassSpec("tree", "tree", (pred("tree", tree_check, recheck=_is_cycle),), "connected and acyclic"),
    ClassSpec("weakly_modular", "weakly_modular", WM, "triangle and quadrangle conditions"),
    ClassSpec("modular", "modular", MODULAR, "bipartite weakly modular"),
    ClassSpec(
        "pseudo_modular",
        "pseudo_modular",
        (pred("pseudo_modular", lambda m: P.metric_triangles_trivial(m, allow_triangles=True), "pseudo_modular"),),
        "metric triangles of size at most one",
    ),
    ClassSpec("quasi_modular", "quasi_modular", WM + (NO_K4M,), "weakly modular without induced K4-"),
    ClassSpec("meshed", "meshed", (pred("qc_minus", P.qc_minus, recheck=_bad_qc_minus),), "weak quadrangle condition QC-"),
    ClassSpec("median", "median", MODULAR + (NO_K23,), "modular without induced K2,3"),
    ClassSpec("quasi_median", "quasi_median", WM + (NO_K4M, NO_K23), "quasi-modular without induced K2,3"),
    ClassSpec(
        "pseudo_median",
        "pseudo_median",
        (pred("pseudo_modular", lambda m: P.metric_triangles_trivial(m, allow_triangles=True), "pseudo_modular"), NO_PMH),
        "pseudo-modular without the H1-H4 obstructions",
    ),
    ClassSpec("weakly_median", "weakly_median", WM + (NO_PMH,), "weakly modular without the H1-H4 obstructions"),
    ClassSpec("bridged", "bridged", WM + (NO_C4, NO_C5), "weakly modular without induced C4, C5"),
    ClassSpec("weakly_bridged", "weakly_bridged", WM + (NO_C4,), "weakly modular without induced C4"),
    ClassSpec("convex_balls", "convex_balls", CONVEX_BALLS, "triangle-pentagon and interval-neighbourhood conditions"),
    ClassSpec(
        "bucolic",
        "bucolic",
        WM + (NO_K23, induced("w4", lambda: families.wheel(4)), induced("w4m", lambda: families.almost_wheel(4))),
        "weakly modular without induced K2,3, W4, W4-",
    ),
    ClassSpec("clique_helly", "clique_helly", (pred("clique_helly", P.clique_helly, "clique_helly"),)),
    ClassSpec("c4w4", "c4w4", (pred("c4w4", P.c4w4, "c4w4"),), "every induced square lies in a 4-wheel"),
    ClassSpec(
        "helly",
        "helly",
        (pred("clique_helly", P.clique_helly, "clique_helly"),) + WM + (pred("c4w4", P.c4w4, "c4w4"),),
        "clique-Helly weakly modular with every square in a 4-wheel",
    ),
    ClassSpec("thick", "thick", (pred("thick", P.is_thick, "thick"),), "every 2-interval contains a square"),
    ClassSpec(
        "dual_polar",
        "dual_polar",
        WM + (pred("thick", P.is_thick, "thick"), ISO_K4M, ISO_K33M),
        "thick weakly modular without isometric K4-, K3,3-",
    ),
    ClassSpec("strongly_modular", "strongly_modular", MODULAR + (ISO_K4M, ISO_K33M)),
    ClassSpec("sweakly_modular", "sweakly_modular", WM + (ISO_K4M, ISO_K33M)),
    ClassSpec(
        "positioning_condition",
        "positioning_condition",
        (pred("positioning_condition", P.positioning_condition, "positioning_condition"),),
    ),
    ClassSpec(
        "two_interval_condition_3",
        "two_interval_condition_3",
        (pred("two_interval_condition_3", P.two_interval_condition_3, "two_interval_condition_3"),),
    ),
    ClassSpec(
        "two_interval_condition_4",
        "two_interval_condition_4",
        (pred("two_interval_condition_4", P.two_interval_condition_4, "two_interval_condition_4"),),
    ),
    ClassSpec(
        "link_condition",
        "link_condition",
        (pred("link_condition", P.link_condition, recheck=_bad_link),),
        "every neighbourhood induces a line graph",
        requires=("beineke_F",),
    ),
    ClassSpec(
        "matroid_basis",
        "matroid_basis",
        (
            pred("two_interval_condition_3", P.two_interval_condition_3, "two_interval_condition_3"),
            pred("positioning_condition", P.positioning_condition, "positioning_condition"),
        ),
    ),
    ClassSpec(
        "delta_matroid_basis",
        "delta_matroid_basis",
        (
            pred("two_interval_condition_4", P.two_interval_condition_4, "two_interval_condition_4"),
            pred("positioning_condition", P.positioning_condition, "positioning_condition"),
            pred("link_condition", P.link_condition, recheck=_bad_link),
        ),
        requires=("beineke_F",),
    ),
    ClassSpec("partial_cube", "partial_cube", PC, "bipartite with convex halfspaces"),
    ClassSpec(
        "partial_hamming",
        "partial_hamming",
        (
            pred(
                "partial_hamming",
                P.partial_hamming,
                formula=("E(u,v) -> convw(u,v) & convweq(u,v) & convnonw(u,v) & convnonweq(u,v)", ("u", "v")),
            ),
        ),
    ),
    ClassSpec("com", "com", COM, "partial cube whose antipodal intervals are gated"),
    ClassSpec("ample", "ample", COM + (pred("ample", P.ample_condition, formula=("antipodal_uv(u,v) -> cube_uv(u,v)", ("u", "v"))),), "COM whose antipodal intervals are cubes"),
    ClassSpec("antipodal", "antipodal", (pred("antipodal", P.is_antipodal_graph, "antipodal"),)),
    ClassSpec(
        "oriented_matroid",
        "oriented_matroid",
        COM + (pred("antipodal", P.is_antipodal_graph, "antipodal"),),
        "antipodal COM",
    ),
    ClassSpec("convex_intervals", "convex_intervals", (pred("convex_intervals", P.convex_intervals, "convex_intervals"),)),
    ClassSpec("peano", "peano", (PEANO,)),
    ClassSpec("jhc", "jhc", (PEANO,), "join-hull commutativity (the Peano axiom)"),
    ClassSpec("pasch", "pasch", (PASCH,)),
    ClassSpec("sand_glass", "sand_glass", (pred("sand_glass", P.sand_glass, "sand_glass"),)),
    ClassSpec("pasch_peano", "pasch_peano", (PASCH, PEANO)),
    ClassSpec("bipartite_pasch", "bipartite_pasch", (PASCH,) + PC),
    ClassSpec("bipartite_peano", "bipartite_peano", (PEANO,) + PC),
    ClassSpec("cellular", "cellular", (BIP, pred("cellular", P.cellular, recheck=_bad_cellular))),
    ClassSpec(
        "almost_median",
        "almost_median",
        PC + (pred("isometric_boundaries", P.almost_median, recheck=_bad_boundary),),
        "partial cube with isometric boundaries",
    ),
    ClassSpec(
        "netlike_partial_cube",
        "netlike_partial_cube",
        PC
        + (pred("netlike", P.netlike, formula=("E(u,v) -> ph_stable(u,v) & deg3_convex(u,v)", ("u", "v"))),),
        "partial cube with ph-stable, degree-3-convex boundaries",
    ),
    ClassSpec("distance_hereditary", "distance_hereditary", DH, "four-point characterisation"),
    ClassSpec("ptolemaic", "ptolemaic", PTOLEMAIC, "ptolemaic inequality"),
    ClassSpec("block_graph", "block_graph", (pred("block_graph", block_check, recheck=_same_block),), "every block is complete"),
    ClassSpec("alpha_zero", "alpha_zero", (pred("alpha_zero", P.alpha_zero_condition, "alpha_zero_direct"),)),
    ClassSpec(
        "alpha_one",
        "alpha_one",
        (pred("alpha_one", alpha_one_check, recheck=_bad_alpha_one),),
        "alpha_1-metric inequality",
        requires=("half_hyperbolic_H",),
    ),
    ClassSpec(
        "half_hyperbolic",
        "half_hyperbolic",
        (pred("half_hyperbolic", half_hyperbolic_check, recheck=_bad_half),),
        "four-point hyperbolicity at most 1/2",
        requires=("half_hyperbolic_H",),
    ),
]

REGISTRY: dict[str, ClassSpec] = {s.class_id: s for s in _SPECS}

# alternative sentences that must agree with a registered class
ALTERNATES = {
    "weakly_modular": ("weakly_modular_equilateral",),
    "modular": ("modular_qc", "modular_median", "modular_mtriangle"),
    "median": ("median_unique",),
    "weakly_bridged": ("weakly_bridged_inc",),
    "block_graph": ("block_graph_slim",),
    "alpha_zero": ("alpha_zero_direct",),
}

# fixed implication table for the audit
IMPLICATIONS = (
    ("median", "modular"),
    ("modular", "weakly_modular"),
    ("weakly_modular", "meshed"),
    ("median", "partial_cube"),
    ("ample", "com"),
    ("oriented_matroid", "com"),
    ("bridged", "weakly_bridged"),
    ("weakly_bridged", "convex_balls"),
    ("ptolemaic", "distance_hereditary"),
    ("bipartite_pasch", "partial_cube"),
)


def class_ids() -> list[str]:
    return sorted(REGISTRY)


def get_spec(class_id: str) -> ClassSpec:
    try:
        return REGISTRY[class_id]
    except KeyError:
        raise BadParams(f"unknown class {class_id!r}") from None


def _metric(g) -> MetricOracle:
    return g if isinstance(g, MetricOracle) else build_metric(g)


def _requirements(spec: ClassSpec) -> tuple:
    need = list(spec.requires)
    for c in spec.conjuncts:
        need.extend(c.requires)
    return tuple(dict.fromkeys(need))


def _missing(spec: ClassSpec) -> Optional[str]:
    for name in _requirements(spec):
        try:
            families.forbidden_list(name)
        except MissingData as exc:
            return str(exc)
    return None


def _run(spec: ClassSpec, m: MetricOracle, cache: dict) -> Verdict:
    why = _missing(spec)
    if why is not None:
        return Verdict(None, reason=why)
    for c in spec.conjuncts:
        r = cache.get(c.name)
        if r is None:
            r = cache[c.name] = c.check(m)
        if not r.holds:
            return Verdict(False, tuple(int(i) for i in r.witness), c.name)
    return TRUE


def recognize(class_id: str, g) -> Verdict:
    """Direct verdict for ``class_id`` on the connected graph ``g``."""
    return _run(get_spec(class_id), _metric(g), {})


def classify_all(g) -> dict[str, Verdict]:
    """Every registered class, sorted by id; shared conjuncts are evaluated once."""
    m = _metric(g)
    cache: dict = {}
    return {cid: _run(REGISTRY[cid], m, cache) for cid in class_ids()}


def interval_delta_slim(g, delta) -> Verdict:
    r = P.interval_delta_slim(_metric(g), delta)
    return TRUE if r.holds else Verdict(False, r.witness, f"interval_delta_slim_{int(P.as_half_integer(delta))}")


def verify_witness(class_id: str, g, verdict: Verdict, prelude=None) -> bool:
    """Confirm that a false verdict's witness falsifies its conjunct."""
    from .folb import evaluate, parse
    from .folb.ast import Quant
    from .folb.prelude import default_prelude

    if verdict.value is not False:
        raise ValueError("only false verdicts carry witnesses")
    m = _metric(g)
    c = next(c for c in get_spec(class_id).conjuncts if c.name == verdict.conjunct)
    w = tuple(verdict.witness)
    if c.mode is not None:
        pats = [c.pattern()] if c.pattern is not None else families.forbidden_list(c.requires[0])
        return any(embeds(m, h, w, c.mode) for h in pats)
    if c.recheck is not None:
        return bool(c.recheck(m, w))
    prelude = prelude or default_prelude()
    if c.formula is not None:
        text, names = c.formula
        f = parse(text, prelude, free=names)
        return not evaluate(f, m, dict(zip(names, w))).value
    mac = prelude.macros[c.macro]
    if mac.params:
        return not evaluate(mac.body, m, dict(zip(mac.params, w))).value
    node = mac.body
    env = {}
    for value in w:
        if not (isinstance(node, Quant) and node.kind == "forall"):
            return False
        env[node.var] = value
        node = node.body
    return not evaluate(node, m, env).value


def conjunct(name: str) -> Conjunct:
    for s in _SPECS:
        for c in s.conjuncts:
            if c.name == name:
                return c
    raise KeyError(name)


@dataclass(frozen=True)
class Violation:
    graph: str
    premise: str
    conclusion: str
    witness: tuple


def implication_audit(corpus, implications=IMPLICATIONS) -> list[Violation]:
    """Check the implication table on every graph; returns the violations."""
    out = []
    for i, g in enumerate(corpus):
        m = _metric(g)
        cache: dict = {}
        for a, b in implications:
            va = _run(REGISTRY[a], m, cache)
            if not va.value:
                continue
            vb = _run(REGISTRY[b], m, cache)
            if vb.value is False:
                name = getattr(m.graph, "name", None) or f"graph[{i}]"
                out.append(Violation(name, a, b, vb.witness))
    return out


def tsv_lines(verdicts: dict) -> list[str]:
    return [f"{cid}\t{v.label}\t{v.witness_text()}" for cid, v in sorted(verdicts.items())]

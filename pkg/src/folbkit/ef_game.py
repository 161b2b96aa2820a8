"""Exact Ehrenfeucht-Fraisse games on structures with one ternary relation.

Positions are sets of picked pairs: the win condition (the picks form a
partial isomorphism) does not depend on the order of the rounds, so a
position is memoised as a frozenset of pairs plus the rounds left. Spoiler
never re-picks an element (Duplicator would answer with its partner and
nothing changes), and Duplicator never answers a fresh element with a
picked one (that breaks injectivity at once).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import ResourceBudgetExceeded
from .folb.analyze import quantifier_rank_b
from .folb.evaluator import evaluate
from .graph import Graph
from .metric import build_metric

DEFAULT_BUDGET = 10**8

DUPLICATOR = "Duplicator"
SPOILER = "Spoiler"


class RelStructure:
    """A finite universe ``0..n-1`` with one ternary relation ``relation[u, x, v]``."""

    def __init__(self, relation, name: Optional[str] = None):
        r = np.array(relation, dtype=bool)
        if r.ndim != 3 or len(set(r.shape)) != 1:
            raise ValueError("relation must be an n x n x n boolean array")
        r.setflags(write=False)
        self.relation = r
        self.n = r.shape[0]
        self.name = name

    @classmethod
    def from_graph(cls, g: Graph) -> "RelStructure":
        """The betweenness structure of a connected graph."""
        return cls(build_metric(g).betweenness(), g.name)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable) -> "RelStructure":
        r = np.zeros((n, n, n), dtype=bool)
        for u, x, v in triples:
            r[u, x, v] = True
        return cls(r)

    def __repr__(self):
        return f"<RelStructure {self.name or ''} n={self.n}>"


@dataclass(frozen=True)
class GameOutcome:
    winner: str
    r: int
    spoiler_strategy: Optional[tuple] = None  # (side, element), side 0 = first structure
    nodes: int = 0

    @property
    def duplicator_wins(self) -> bool:
        return self.winner == DUPLICATOR


def _as_structure(s) -> RelStructure:
    if isinstance(s, RelStructure):
        return s
    if isinstance(s, Graph):
        return RelStructure.from_graph(s)
    return RelStructure(s.relation)


class Solver:
    """Minimax search shared across rounds for one pair of structures."""

    def __init__(self, a, b, budget: int = DEFAULT_BUDGET):
        self.a = _as_structure(a)
        self.b = _as_structure(b)
        self.na, self.nb = self.a.n, self.b.n
        self.ra = self.a.relation.tobytes()
        self.rb = self.b.relation.tobytes()
        self.budget = budget
        self.nodes = 0
        self.memo: dict = {}

    def _consistent(self, pairs: tuple, e: int, f: int) -> bool:
        """Does adding (e, f) to the partial isomorphism ``pairs`` keep it one?"""
        na, nb, ra, rb = self.na, self.nb, self.ra, self.rb
        ps = pairs + ((e, f),)
        for x, y in ps:
            for z, w in ps:
                if ra[(e * na + x) * na + z] != rb[(f * nb + y) * nb + w]:
                    return False
                if ra[(x * na + e) * na + z] != rb[(y * nb + f) * nb + w]:
                    return False
                if ra[(x * na + z) * na + e] != rb[(y * nb + w) * nb + f]:
                    return False
        return True

    def spoiler_move(self, pairs: tuple, k: int) -> Optional[tuple]:
        """A winning first move for Spoiler from ``pairs`` with ``k`` rounds, or None."""
        if k == 0:
            return None
        key = (frozenset(pairs), k)
        if key in self.memo:
            return self.memo[key]
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceBudgetExceeded(f"EF search exceeded {self.budget} positions")
        used_a = {p for p, _ in pairs}
        used_b = {q for _, q in pairs}
        result = None
        for side in (0, 1):
            mine, theirs = (self.na, self.nb) if side == 0 else (self.nb, self.na)
            used_mine, used_theirs = (used_a, used_b) if side == 0 else (used_b, used_a)
            for e in range(mine):
                if e in used_mine:
                    continue
                survived = False
                for f in range(theirs):
                    if f in used_theirs:
                        continue
                    pa, pb = (e, f) if side == 0 else (f, e)
                    if not self._consistent(pairs, pa, pb):
                        continue
                    nxt = tuple(sorted(pairs + ((pa, pb),)))
                    if self.spoiler_move(nxt, k - 1) is None:
                        survived = True
                        break
                if not survived:
                    result = (side, e)
                    break
            if result is not None:
                break
        self.memo[key] = result
        return result

    def play(self, r: int) -> GameOutcome:
        if r < 0:
            raise ValueError("r must be non-negative")
        move = self.spoiler_move((), r)
        winner = DUPLICATOR if move is None else SPOILER
        return GameOutcome(winner, r, move, self.nodes)


def play(a, b, r: int, budget: int = DEFAULT_BUDGET) -> GameOutcome:
    """Exact outcome of the ``r``-move game on ``a`` and ``b``."""
    return Solver(a, b, budget).play(r)


def distinguishing_rank(a, b, r_max: int, budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Least ``r <= r_max`` for which Spoiler wins, or None."""
    s = Solver(a, b, budget)
    for r in range(r_max + 1):
        if s.play(r).winner == SPOILER:
            return r
    return None


@dataclass(frozen=True)
class Disagreement:
    sentence: str
    value_a: bool
    value_b: bool


def agreement_check(a, b, r: int, sentences, budget: int = DEFAULT_BUDGET) -> list[Disagreement]:
    """Sentences of rank at most ``r`` (over B alone) that separate ``a`` and ``b``
    although Duplicator wins the ``r``-move game. Must be empty.

    ``sentences`` is an iterable of formulas or of ``(name, formula)`` pairs.
    """
    a, b = _as_structure(a), _as_structure(b)
    if play(a, b, r, budget).winner != DUPLICATOR:
        return []
    out = []
    for item in sentences:
        name, f = item if isinstance(item, tuple) else (getattr(item, "name", None) or str(item), item)
        if quantifier_rank_b(f) > r:
            continue
        va, vb = evaluate(f, a).value, evaluate(f, b).value
        if va != vb:
            out.append(Disagreement(name, va, vb))
    return out

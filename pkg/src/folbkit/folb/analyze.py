"""Static measures of formulas: quantifier rank, width, size, cost."""

from __future__ import annotations

from dataclasses import dataclass

from .ast import Eq, Quant, Rel, children, free_vars


@dataclass(frozen=True)
class Analysis:
    qr: int
    qr_b: int
    width: int
    size: int
    free: tuple


def _node(f):
    return getattr(f, "ast", f)


def quantifier_rank(f) -> int:
    node = _node(f)
    if isinstance(node, (Rel, Eq)):
        return 0
    if isinstance(node, Quant):
        return quantifier_rank(node.body) + 1
    return max(quantifier_rank(c) for c in children(node))


def quantifier_rank_b(f) -> int:
    """Rank over the signature {B} alone: each E atom costs one quantifier.

    E_B(u,v) unfolds to ``u != v & forall x (B(u,x,v) -> x = u | x = v)``, so
    this is the rank that matters when two structures share only B.
    """
    node = _node(f)
    if isinstance(node, Rel):
        return 1 if node.name == "E" else 0
    if isinstance(node, Eq):
        return 0
    if isinstance(node, Quant):
        return quantifier_rank_b(node.body) + 1
    return max(quantifier_rank_b(c) for c in children(node))


def free_var_table(f) -> dict:
    """``id(node) -> frozenset`` of free variables for every subformula."""
    table: dict = {}

    def walk(node):
        if isinstance(node, Rel):
            fv = frozenset(node.args)
        elif isinstance(node, Eq):
            fv = frozenset((node.left, node.right))
        elif isinstance(node, Quant):
            fv = walk(node.body) - {node.var}
        else:
            fv = frozenset().union(*(walk(c) for c in children(node)))
        table[id(node)] = fv
        return fv

    walk(_node(f))
    return table


def width(f) -> int:
    return max(len(v) for v in free_var_table(f).values())


def size(f) -> int:
    node = _node(f)
    return 1 + sum(size(c) for c in children(node))


def analyze(f) -> Analysis:
    node = _node(f)
    free = getattr(f, "free", None) or tuple(sorted(free_vars(node)))
    return Analysis(quantifier_rank(node), quantifier_rank_b(node), width(node), size(node), free)


def structure_size(n: int) -> int:
    # universe plus one ternary relation
    return n + 1 + n ** 3


def cost_estimate(f, n: int) -> int:
    """Predicted operation count ``size * (n + 1 + n^3) ** width``."""
    a = analyze(f)
    return a.size * structure_size(n) ** a.width

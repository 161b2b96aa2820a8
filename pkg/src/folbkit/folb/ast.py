"""Formula syntax trees.

Nodes are frozen dataclasses so that structurally equal formulas compare and
hash equal. Conjunctions and disjunctions are n-ary and flattened.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Rel:
    name: str  # "B" or "E"
    args: tuple


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    body: "Node"


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Implies:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Iff:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Quant:
    kind: str  # "forall" or "exists"
    var: str
    body: "Node"


Node = Union[Rel, Eq, Not, And, Or, Implies, Iff, Quant]


def conj(parts) -> Node:
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, And) else (p,))
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(parts) -> Node:
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Or) else (p,))
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def children(node: Node) -> tuple:
    if isinstance(node, (Rel, Eq)):
        return ()
    if isinstance(node, (Not, Quant)):
        return (node.body,)
    if isinstance(node, (And, Or)):
        return node.parts
    return (node.left, node.right)


def free_vars(node: Node) -> frozenset:
    if isinstance(node, Rel):
        return frozenset(node.args)
    if isinstance(node, Eq):
        return frozenset((node.left, node.right))
    if isinstance(node, Quant):
        return free_vars(node.body) - {node.var}
    out: frozenset = frozenset()
    for c in children(node):
        out |= free_vars(c)
    return out


def all_vars(node: Node) -> frozenset:
    if isinstance(node, Rel):
        return frozenset(node.args)
    if isinstance(node, Eq):
        return frozenset((node.left, node.right))
    out = frozenset((node.var,)) if isinstance(node, Quant) else frozenset()
    for c in children(node):
        out |= all_vars(c)
    return out


def _fresh(base: str, taken) -> str:
    i = 1
    while f"{base}_{i}" in taken:
        i += 1
    return f"{base}_{i}"


def substitute(node: Node, mapping: dict) -> Node:
    """Rename free variables by ``mapping``, alpha-renaming binders that would capture."""
    if not mapping:
        return node
    if isinstance(node, Rel):
        return Rel(node.name, tuple(mapping.get(a, a) for a in node.args))
    if isinstance(node, Eq):
        return Eq(mapping.get(node.left, node.left), mapping.get(node.right, node.right))
    if isinstance(node, Quant):
        inner = {k: v for k, v in mapping.items() if k != node.var}
        var = node.var
        if var in inner.values():
            taken = set(inner.values()) | set(inner) | all_vars(node.body)
            new = _fresh(var, taken)
            inner[var] = new
            var = new
        return Quant(node.kind, var, substitute(node.body, inner))
    if isinstance(node, Not):
        return Not(substitute(node.body, mapping))
    if isinstance(node, And):
        return And(tuple(substitute(p, mapping) for p in node.parts))
    if isinstance(node, Or):
        return Or(tuple(substitute(p, mapping) for p in node.parts))
    if isinstance(node, Implies):
        return Implies(substitute(node.left, mapping), substitute(node.right, mapping))
    return Iff(substitute(node.left, mapping), substitute(node.right, mapping))


# ------------------------------------------------------------------ printing

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}


def to_text(node: Node) -> str:
    """Render in the concrete syntax; ``parse(to_text(f))`` rebuilds ``f``."""
    return _render(node, 0)


def _render(node: Node, ctx: int) -> str:
    if isinstance(node, Rel):
        return f"{node.name}({','.join(node.args)})"
    if isinstance(node, Eq):
        return f"{node.left} = {node.right}"
    if isinstance(node, Quant):
        s = f"{node.kind} {node.var} {_render(node.body, 0)}"
        return f"({s})" if ctx > 0 else s
    if isinstance(node, Not):
        if isinstance(node.body, Eq):
            return f"{node.body.left} != {node.body.right}"
        return "!" + _render(node.body, 6)
    prec = _PREC[type(node)]
    if isinstance(node, (And, Or)):
        op = " & " if isinstance(node, And) else " | "
        s = op.join(_render(p, prec + 1) for p in node.parts)
    elif isinstance(node, Implies):
        s = f"{_render(node.left, prec + 1)} -> {_render(node.right, prec)}"
    else:
        s = f"{_render(node.left, prec + 1)} <-> {_render(node.right, prec + 1)}"
    return f"({s})" if prec < ctx else s

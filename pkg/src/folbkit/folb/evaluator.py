"""Model checking by recursive descent over the expanded syntax tree.

Quantifiers run over vertices in index order and stop at the first decisive
value, so the first counterexample found is the lexicographically least one.
Quantified subformulas are memoised on the values of their free variables,
which is what keeps the running time within ``size * |A| ** width``.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import UnboundVariable
from ..metric import DENSE_LIMIT, MetricOracle, edge_relation
from .analyze import free_var_table
from .ast import And, Eq, Iff, Implies, Not, Or, Quant, Rel

MEMO_LIMIT = 1 << 20  # skip memoisation when n ** |free vars| exceeds this

_TABLES: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class EvalResult:
    value: bool
    witness: tuple  # ((variable, vertex), ...)

    def __bool__(self):
        return self.value

    @property
    def values(self) -> tuple:
        return tuple(v for _, v in self.witness)

    @property
    def variables(self) -> tuple:
        return tuple(k for k, _ in self.witness)


class _Tables:
    """Flat lookup tables for B and E over one structure."""

    def __init__(self, n: int, bt: Optional[bytes], et: bytes, dist=None):
        self.n = n
        self.bt = bt
        self.et = et
        self.dist = dist


def _tables(struct) -> _Tables:
    try:
        return _TABLES[struct]
    except (KeyError, TypeError):
        pass
    if isinstance(struct, MetricOracle):
        n = struct.n
        et = (struct.dist == 1).tobytes()
        if n <= DENSE_LIMIT:
            t = _Tables(n, struct.betweenness().tobytes(), et)
        else:
            t = _Tables(n, None, et, struct.dist.tolist())
    else:
        # any finite structure exposing a boolean ``relation`` tensor
        r = np.ascontiguousarray(struct.relation, dtype=bool)
        t = _Tables(r.shape[0], r.tobytes(), edge_relation(r).tobytes())
    try:
        _TABLES[struct] = t
    except TypeError:
        pass
    return t


class _Evaluator:
    def __init__(self, tables: _Tables, root):
        self.n = tables.n
        self.bt = tables.bt
        self.et = tables.et
        self.dist = tables.dist
        self.fv = {k: tuple(sorted(v)) for k, v in free_var_table(root).items()}
        self.memo: dict = {}

    # ----------------------------------------------------------- semantics
    def ev(self, node, env) -> bool:
        t = type(node)
        if t is Rel:
            a = node.args
            n = self.n
            if node.name == "E":
                return self.et[env[a[0]] * n + env[a[1]]] != 0
            u, x, v = env[a[0]], env[a[1]], env[a[2]]
            if self.bt is not None:
                return self.bt[(u * n + x) * n + v] != 0
            d = self.dist
            return d[u][x] + d[x][v] == d[u][v]
        if t is And:
            for p in node.parts:
                if not self.ev(p, env):
                    return False
            return True
        if t is Not:
            return not self.ev(node.body, env)
        if t is Eq:
            return env[node.left] == env[node.right]
        if t is Quant:
            return self.quant(node, env)
        if t is Or:
            for p in node.parts:
                if self.ev(p, env):
                    return True
            return False
        if t is Implies:
            return (not self.ev(node.left, env)) or self.ev(node.right, env)
        if t is Iff:
            return self.ev(node.left, env) == self.ev(node.right, env)
        raise TypeError(f"not a formula node: {node!r}")

    def quant(self, node, env) -> bool:
        fv = self.fv[id(node)]
        key = None
        if self.n ** len(fv) <= MEMO_LIMIT:
            key = (id(node),) + tuple(env[v] for v in fv)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        var = node.var
        saved = env.get(var, _MISSING)
        want = node.kind == "exists"
        result = not want
        body = node.body
        for a in range(self.n):
            env[var] = a
            if self.ev(body, env) == want:
                result = want
                break
        if saved is _MISSING:
            del env[var]
        else:
            env[var] = saved
        if key is not None:
            self.memo[key] = result
        return result

    # ------------------------------------------------------------- witness
    def explain(self, node, env, value, out) -> None:
        """Append the assignments that make ``node`` evaluate to ``value``."""
        t = type(node)
        if t is Quant:
            decisive = (node.kind == "forall" and not value) or (node.kind == "exists" and value)
            if not decisive:
                return
            saved = env.get(node.var, _MISSING)
            for a in range(self.n):
                env[node.var] = a
                if self.ev(node.body, env) == value:
                    out.append((node.var, a))
                    self.explain(node.body, env, value, out)
                    break
            if saved is _MISSING:
                env.pop(node.var, None)
            else:
                env[node.var] = saved
        elif t is Not:
            self.explain(node.body, env, not value, out)
        elif t is And and not value:
            for p in node.parts:
                if not self.ev(p, env):
                    self.explain(p, env, False, out)
                    return
        elif t is Or and value:
            for p in node.parts:
                if self.ev(p, env):
                    self.explain(p, env, True, out)
                    return
        elif t is Implies and value:
            if not self.ev(node.left, env):
                self.explain(node.left, env, False, out)
            else:
                self.explain(node.right, env, True, out)


_MISSING = object()


def evaluate(f, m, env: Optional[dict] = None) -> EvalResult:
    """Evaluate formula ``f`` on structure ``m`` under assignment ``env``.

    ``m`` is a :class:`MetricOracle` or any object with a boolean ``relation``
    tensor (then E is derived from the relation). The witness follows the
    outermost quantifier prefix whose polarity decided the value, descending
    through negation, a false conjunct or a true disjunct.
    """
    node = getattr(f, "ast", f)
    env = dict(env or {})
    tables = _tables(m)
    ev = _Evaluator(tables, node)
    missing = set(ev.fv[id(node)]) - set(env)
    if missing:
        raise UnboundVariable(f"no value for free variable(s): {', '.join(sorted(missing))}")
    for k, v in env.items():
        if not 0 <= int(v) < tables.n:
            raise ValueError(f"value {v} for {k} is not a vertex")
    value = ev.ev(node, env)
    out: list = []
    ev.explain(node, env, value, out)
    return EvalResult(bool(value), tuple(out))


def holds(f, m, env: Optional[dict] = None) -> bool:
    return evaluate(f, m, env).value

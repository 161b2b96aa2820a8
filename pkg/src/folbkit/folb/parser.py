"""Lexer, recursive-descent parser and macro expansion for FOLB text."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..errors import (
    ArityMismatch,
    CyclicMacro,
    FormulaSyntaxError,
    UnboundVariable,
    UnknownMacro,
)
from .ast import And, Eq, Iff, Implies, Node, Not, Or, Quant, Rel, conj, disj, free_vars, substitute, to_text

KEYWORDS = {"forall", "exists", "def"}
RELATIONS = {"B": 3, "E": 2}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow><->|->)
  | (?P<defeq>:=)
  | (?P<neq>!=)
  | (?P<op>[()&|!,=])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "kw", or the literal operator text; "eof" at the end
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if mt is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, [])
        kind = mt.lastgroup
        s = mt.group()
        if kind == "ident":
            out.append(Token("kw" if s in KEYWORDS else "ident", s, pos))
        elif kind != "ws":
            out.append(Token(s, s, pos))
        pos = mt.end()
    out.append(Token("eof", "", len(text)))
    return out


@dataclass(frozen=True)
class Macro:
    name: str
    params: tuple
    body: Node
    source: str = ""

    @property
    def arity(self) -> int:
        return len(self.params)


@dataclass
class Prelude:
    """Ordered macro definitions.

    ``unavailable`` maps names whose definition depends on missing data to the
    reason; references to them raise ``UnknownMacro`` carrying that reason.
    """

    macros: dict = field(default_factory=dict)
    unavailable: dict = field(default_factory=dict)

    def __contains__(self, name):
        return name in self.macros

    def __getitem__(self, name) -> Macro:
        return self.macros[name]

    def names(self) -> list[str]:
        return list(self.macros)

    def sentences(self) -> list[str]:
        return [k for k, m in self.macros.items() if m.arity == 0]

    def copy(self) -> "Prelude":
        return Prelude(dict(self.macros), dict(self.unavailable))

    def define(self, name: str, params: Iterable[str], text: str) -> Macro:
        """Parse ``text`` as the body of a new macro and add it."""
        params = tuple(params)
        if name in RELATIONS or name in KEYWORDS:
            raise FormulaSyntaxError(f"{name!r} cannot be redefined", 0, [])
        if len(set(params)) != len(params):
            raise FormulaSyntaxError(f"repeated parameter in {name}", 0, [])
        body = _Parser(text, self, defining=name).parse_formula_text()
        extra = free_vars(body) - set(params)
        if extra:
            raise UnboundVariable(f"in definition of {name}: unbound {', '.join(sorted(extra))}")
        mac = Macro(name, params, body, text)
        self.macros[name] = mac
        self.unavailable.pop(name, None)
        return mac

    def extend(self, text: str, tolerate_unavailable: bool = True) -> "Prelude":
        """Load ``def`` lines from prelude text into this prelude (in place)."""
        for name, params, body, line in split_definitions(text):
            try:
                self.define(name, params, body)
            except UnknownMacro as exc:
                if tolerate_unavailable and exc.name in self.unavailable:
                    self.unavailable[name] = self.unavailable[exc.name]
                    continue
                raise _at_line(exc, line)
            except (FormulaSyntaxError, ArityMismatch, UnboundVariable, CyclicMacro) as exc:
                raise _at_line(exc, line)
        return self


def _at_line(exc, line):
    exc.args = (f"line {line}: {exc.args[0] if exc.args else exc}",) + exc.args[1:]
    return exc


_DEF_RE = re.compile(r"^def\s+([A-Za-z_][A-Za-z0-9_']*)\s*\(([^)]*)\)\s*:=\s*(.*)$", re.S)


def split_definitions(text: str):
    """Yield ``(name, params, body_text, line_no)`` from prelude text.

    A logical line starts with ``def``; following lines that do not start
    with ``def`` continue it. ``#`` starts a comment.
    """
    chunks: list[tuple[int, list[str]]] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.lstrip().startswith("def ") or line.strip() == "def":
            chunks.append((no, [line.strip()]))
        elif chunks:
            chunks[-1][1].append(line.strip())
        else:
            raise FormulaSyntaxError(f"line {no}: expected 'def'", 0, ["def"])
    for no, parts in chunks:
        logical = " ".join(parts)
        mt = _DEF_RE.match(logical)
        if mt is None:
            raise FormulaSyntaxError(f"line {no}: expected 'def name(args) := formula'", 0, ["def"])
        params = [p.strip() for p in mt.group(2).split(",") if p.strip()]
        yield mt.group(1), params, mt.group(3), no


class _Parser:
    def __init__(self, text: str, prelude: Optional[Prelude], defining: Optional[str] = None):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.prelude = prelude or Prelude()
        self.defining = defining

    # -- token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, expected):
        t = self.tok
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise FormulaSyntaxError(f"unexpected {got}", t.pos, expected)

    def expect(self, kind) -> Token:
        if self.tok.kind != kind:
            self.fail([kind])
        t = self.tok
        self.i += 1
        return t

    def term(self) -> str:
        if self.tok.kind != "ident":
            self.fail(["variable"])
        return self.expect("ident").text

    # -- grammar
    def parse_formula_text(self) -> Node:
        f = self.formula()
        if self.tok.kind != "eof":
            self.fail(["&", "|", "->", "<->", "end of input"])
        return f

    def formula(self) -> Node:
        if self.tok.kind == "kw" and self.tok.text in ("forall", "exists"):
            return self.quant()
        return self.impl()

    def quant(self) -> Node:
        kind = self.expect("kw").text
        var = self.term()
        return Quant(kind, var, self.formula())

    def impl(self) -> Node:
        left = self.disj()
        if self.tok.kind == "->":
            self.i += 1
            return Implies(left, self.impl_or_quant())
        if self.tok.kind == "<->":
            self.i += 1
            return Iff(left, self.impl_or_quant())
        return left

    def impl_or_quant(self) -> Node:
        return self.formula()

    def disj(self) -> Node:
        parts = [self.conj()]
        while self.tok.kind == "|":
            self.i += 1
            parts.append(self.conj())
        return disj(parts)

    def conj(self) -> Node:
        parts = [self.neg()]
        while self.tok.kind == "&":
            self.i += 1
            parts.append(self.neg())
        return conj(parts)

    def neg(self) -> Node:
        if self.tok.kind == "!":
            self.i += 1
            return Not(self.neg())
        if self.tok.kind == "kw" and self.tok.text in ("forall", "exists"):
            # a quantifier in operand position swallows everything to its right
            return self.quant()
        return self.atom()

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "(":
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        if t.kind != "ident":
            self.fail(["(", "!", "forall", "exists", "identifier"])
        nxt = self.peek()
        if nxt.kind in ("=", "!="):
            left = self.term()
            op = self.expect(nxt.kind).kind
            right = self.term()
            eq = Eq(left, right)
            return eq if op == "=" else Not(eq)
        if t.text in RELATIONS and nxt.kind == "(":
            self.i += 2
            args = self.args()
            if len(args) != RELATIONS[t.text]:
                raise ArityMismatch(f"{t.text} takes {RELATIONS[t.text]} arguments, got {len(args)}")
            return Rel(t.text, tuple(args))
        self.i += 1
        if nxt.kind == "(":
            self.i += 1
            args = self.args() if self.tok.kind != ")" else self._empty_args()
        else:
            args = []
        return self.expand(t.text, args, t.pos)

    def _empty_args(self):
        self.expect(")")
        return []

    def args(self) -> list[str]:
        out = [self.term()]
        while self.tok.kind == ",":
            self.i += 1
            out.append(self.term())
        self.expect(")")
        return out

    def expand(self, name: str, args: list[str], pos: int) -> Node:
        if name == self.defining:
            raise CyclicMacro(f"macro {name} refers to itself")
        mac = self.prelude.macros.get(name)
        if mac is None:
            exc = UnknownMacro(f"unknown macro {name!r} at position {pos}")
            if name in self.prelude.unavailable:
                exc = UnknownMacro(f"macro {name!r} unavailable: {self.prelude.unavailable[name]}")
            exc.name = name
            raise exc
        if len(args) != mac.arity:
            raise ArityMismatch(f"{name} takes {mac.arity} arguments, got {len(args)}")
        return substitute(mac.body, dict(zip(mac.params, args)))


@dataclass(frozen=True)
class Formula:
    """A parsed, fully expanded formula with its declared free variables."""

    ast: Node
    free: tuple
    text: str = ""
    name: Optional[str] = None

    def __str__(self):
        return to_text(self.ast)


def parse(text: str, prelude: Optional[Prelude] = None, free: Optional[Iterable[str]] = None,
          name: Optional[str] = None) -> Formula:
    """Parse and macro-expand ``text``.

    ``free`` optionally declares the allowed free variables; any other free
    variable raises ``UnboundVariable``. Without it the formula's own free
    variables are recorded in sorted order.
    """
    if prelude is None:
        from .prelude import default_prelude

        prelude = default_prelude()
    ast = _Parser(text, prelude).parse_formula_text()
    fv = free_vars(ast)
    if free is None:
        declared = tuple(sorted(fv))
    else:
        declared = tuple(free)
        extra = fv - set(declared)
        if extra:
            raise UnboundVariable(f"unbound variable(s): {', '.join(sorted(extra))}")
    return Formula(ast, declared, text, name)


def sentence(prelude: Prelude, name: str) -> Formula:
    """The zero-arity prelude macro ``name`` as a closed formula."""
    if name not in prelude.macros:
        exc = UnknownMacro(
            f"macro {name!r} unavailable: {prelude.unavailable[name]}" if name in prelude.unavailable
            else f"unknown prelude sentence {name!r}"
        )
        exc.name = name
        raise exc
    mac = prelude.macros[name]
    if mac.arity:
        raise ArityMismatch(f"{name} takes {mac.arity} arguments; not a sentence")
    return Formula(mac.body, (), mac.source, name)


def macro_formula(prelude: Prelude, name: str) -> Formula:
    """A prelude macro as an open formula over its parameters."""
    mac = prelude[name]
    return Formula(mac.body, mac.params, mac.source, name)

"""Boolean order restrictions over the coordinates of an integer vector.

A restriction is a tree whose leaves compare two coordinates, e.g.
``a1 >= a3``, combined with ``&`` (and), ``|`` (or) and ``!`` (not)::

    >>> r = parse_expr("a1>=a2 & (a1!=a2 | a3>=a4)", 4)
    >>> evaluate(r, (3, 3, 2, 1))
    True

Coordinates are 1-based, as in ``a1 .. an``.  The empty string is the
constant-true restriction.
"""

from __future__ import annotations

import enum
import operator
import re
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ExprSyntaxError

__all__ = [
    "OrderOp",
    "Literal",
    "And",
    "Or",
    "Not",
    "TrueExpr",
    "TRUE",
    "Restriction",
    "parse_expr",
    "evaluate",
]


class OrderOp(enum.Enum):
    LE = "<="
    GE = ">="
    LT = "<"
    GT = ">"
    EQ = "="
    NE = "!="

    @property
    def negation(self) -> "OrderOp":
        return _NEGATION[self]

    def __call__(self, x: int, y: int) -> bool:
        return _PYOP[self](x, y)


_NEGATION = {
    OrderOp.LE: OrderOp.GT,
    OrderOp.GT: OrderOp.LE,
    OrderOp.GE: OrderOp.LT,
    OrderOp.LT: OrderOp.GE,
    OrderOp.EQ: OrderOp.NE,
    OrderOp.NE: OrderOp.EQ,
}

_PYOP = {
    OrderOp.LE: operator.le,
    OrderOp.GE: operator.ge,
    OrderOp.LT: operator.lt,
    OrderOp.GT: operator.gt,
    OrderOp.EQ: operator.eq,
    OrderOp.NE: operator.ne,
}


@dataclass(frozen=True)
class Literal:
    """``a<i> op a<j>`` with 1-based coordinate indices."""

    i: int
    op: OrderOp
    j: int

    def evaluate(self, v: Sequence[int]) -> bool:
        return self.op(v[self.i - 1], v[self.j - 1])

    def __str__(self):
        return f"a{self.i}{self.op.value}a{self.j}"


@dataclass(frozen=True)
class And:
    children: tuple

    def evaluate(self, v):
        return all(c.evaluate(v) for c in self.children)

    def __str__(self):
        return " & ".join(_wrap(c, Or) for c in self.children)


@dataclass(frozen=True)
class Or:
    children: tuple

    def evaluate(self, v):
        return any(c.evaluate(v) for c in self.children)

    def __str__(self):
        return " | ".join(str(c) for c in self.children)


@dataclass(frozen=True)
class Not:
    child: "Node"

    def evaluate(self, v):
        return not self.child.evaluate(v)

    def __str__(self):
        return "!" + _wrap(self.child, (And, Or))


@dataclass(frozen=True)
class TrueExpr:
    def evaluate(self, v):
        return True

    def __str__(self):
        return ""


TRUE = TrueExpr()

Node = Union[Literal, And, Or, Not, TrueExpr]


def _wrap(node, kinds):
    s = str(node)
    return f"({s})" if isinstance(node, kinds) else s


@dataclass(frozen=True)
class Restriction:
    """A parsed restriction tree bound to the dimension ``n`` it was parsed for."""

    root: Node
    n: int

    def __call__(self, v: Sequence[int]) -> bool:
        return evaluate(self, v)

    def __str__(self):
        return str(self.root)


def evaluate(expr: Restriction, v: Sequence[int]) -> bool:
    if len(v) != expr.n:
        raise ValueError(f"vector has length {len(v)}, restriction expects {expr.n}")
    return expr.root.evaluate(v)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<coord>a(?P<index>\d+))|(?P<op><=|>=|!=|<|>|=)|(?P<punct>[&|!()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            # point at the first non-blank character
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.end() - len(m.group(0).lstrip())
        if m.group("coord"):
            tokens.append(("coord", int(m.group("index")), start))
        elif m.group("op"):
            tokens.append(("op", m.group("op"), start))
        else:
            tokens.append((m.group("punct"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, n):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {_describe(tok)}", tok[2])
        return tok

    def expr(self):
        children = [self.term()]
        while self.peek()[0] == "|":
            self.advance()
            children.append(self.term())
        return children[0] if len(children) == 1 else Or(tuple(children))

    def term(self):
        children = [self.factor()]
        while self.peek()[0] == "&":
            self.advance()
            children.append(self.factor())
        return children[0] if len(children) == 1 else And(tuple(children))

    def factor(self):
        kind, _, where = self.peek()
        if kind == "!":
            self.advance()
            if self.peek()[0] in ("end", ")", "&", "|"):
                raise ExprSyntaxError("negation without operand", self.peek()[2])
            return Not(self.factor())
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "coord":
            return self.literal()
        raise ExprSyntaxError(f"expected literal, '!' or '(', found {_describe(self.peek())}", where)

    def literal(self):
        i = self.coord()
        op = OrderOp(self.expect("op")[1])
        j = self.coord()
        return Literal(i, op, j)

    def coord(self):
        _, index, where = self.expect("coord")
        if not 1 <= index <= self.n:
            raise ExprSyntaxError(f"coordinate a{index} out of range 1..{self.n}", where)
        return index


def _describe(tok):
    kind, value, _ = tok
    if kind == "end":
        return "end of input"
    if kind == "coord":
        return f"'a{value}'"
    if kind == "op":
        return f"{value!r}"
    return repr(kind)


def parse_expr(text: str, n: int) -> Restriction:
    """Parse ``text`` into a :class:`Restriction` over ``n`` coordinates.

    Precedence is ``!`` > ``&`` > ``|``; parentheses group.  Raises
    :class:`ExprSyntaxError` on malformed input or an out-of-range index.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if not text.strip():
        return Restriction(TRUE, n)
    p = _Parser(text, n)
    root = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ExprSyntaxError(f"unexpected {_describe(tok)}", tok[2])
    return Restriction(root, n)

"""A small expression language over the q-function vocabulary.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" INT)?
    atom   := INT | MONO | CALL | "(" expr ")"
    CALL   := NAME "(" args ")"
    MONO   := "-"? "q" ("^" INT)?
    NAME   := E | phi | psi | f | G | H | QF

Exponents after ``^`` may carry a leading minus sign.  Inside ``f(...)``
the integers 1 and -1 are accepted as the monomials q^0 and -q^0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .context import BuildContext
from .series import LaurentSeries, SeriesError

NAMES = ("E", "phi", "psi", "f", "G", "H", "QF")
_UNARY = ("E", "phi", "psi", "G", "H")


class ExprError(ValueError):
    pass


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: Fraction


@dataclass(frozen=True)
class MonomialNode:
    sign: int
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Quotient:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sum:
    left: "Node"
    op: str
    right: "Node"


Node = Union[Scalar, MonomialNode, Call, Power, Product, Quotient, Sum]


# -- tokenizer -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    while text[pos:].strip():
        mt = _TOKEN.match(text, pos)
        if mt.group(1):
            out.append(Token("int", mt.group(1), mt.start(1)))
        elif mt.group(2):
            out.append(Token("name", mt.group(2), mt.start(2)))
        else:
            ch = mt.group(3)
            if ch not in "+-*/^(),":
                raise ExprError(f"syntax error at offset {mt.start(3)}: unexpected {ch!r}")
            out.append(Token("op", ch, mt.start(3)))
        pos = mt.end()
    out.append(Token("end", "", len(text)))
    return out


# -- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def error(self, t: Token = None):
        t = t or self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        return ExprError(f"syntax error at offset {t.offset}: unexpected {what}")

    def expect(self, text: str):
        if self.tok.text != text or self.tok.kind == "end":
            raise self.error()
        return self.advance()

    def is_op(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def signed_int(self) -> int:
        sign = 1
        if self.is_op("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "int":
            raise self.error()
        return sign * int(self.advance().text)

    def parse(self) -> Node:
        if self.tok.kind == "end":
            raise ExprError("syntax error at offset 0: empty expression")
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error()
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.advance().text
            node = Sum(node, op, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.is_op("*") or self.is_op("/"):
            op = self.advance().text
            right = self.factor()
            node = Product(node, right) if op == "*" else Quotient(node, right)
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.is_op("^"):
            self.advance()
            node = Power(node, self.signed_int())
        return node

    def monomial(self) -> MonomialNode:
        sign = 1
        if self.is_op("-"):
            self.advance()
            sign = -1
        t = self.tok
        if t.kind != "name" or t.text != "q":
            raise self.error()
        self.advance()
        exponent = 1
        if self.is_op("^"):
            self.advance()
            exponent = self.signed_int()
        return MonomialNode(sign, exponent)

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Scalar(Fraction(int(t.text)))
        if self.is_op("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if self.is_op("-") or (t.kind == "name" and t.text == "q"):
            if self.is_op("-") and not (self.peek().kind == "name" and self.peek().text == "q"):
                raise self.error()
            return self.monomial()
        if t.kind == "name" and t.text in NAMES and self.peek().text == "(":
            return self.call()
        raise self.error()

    def call_arg(self, name: str):
        start = self.tok
        if name == "QF":
            return self.signed_int()
        if name == "f" and (self.tok.kind == "int" or
                            (self.is_op("-") and self.peek().kind == "int")):
            v = self.signed_int()
            if v not in (1, -1):
                raise ExprError(f"invalid monomial at offset {start.offset}: {v}")
            return MonomialNode(v, 0)
        if not (self.is_op("-") or (self.tok.kind == "name" and self.tok.text == "q")):
            raise ExprError(f"invalid monomial at offset {start.offset}")
        return self.monomial()

    def call(self) -> Call:
        name_tok = self.advance()
        name = name_tok.text
        self.expect("(")
        args = []
        if not self.is_op(")"):
            args.append(self.call_arg(name))
            while self.is_op(","):
                self.advance()
                args.append(self.call_arg(name))
        self.expect(")")
        want = 2 if name == "f" else 3 if name == "QF" else 1
        if len(args) != want:
            raise ExprError(f"arity error: {name} takes {want} argument(s), got {len(args)}")
        if name in _UNARY and args[0].exponent < 1:
            raise ExprError(f"invalid monomial: {name} needs q^k with k >= 1")
        return Call(name, tuple(args))


def parse_expr(text: str) -> Node:
    """Parse ``text`` into an AST; raises ExprError on bad input."""
    if not text or not text.strip():
        raise ExprError("syntax error at offset 0: empty expression")
    return _Parser(text).parse()


# -- printer ---------------------------------------------------------------

def _mono_str(m: MonomialNode) -> str:
    body = "q" if m.exponent == 1 else f"q^{m.exponent}"
    return ("-" if m.sign < 0 else "") + body


def _prec(node: Node) -> int:
    if isinstance(node, Sum):
        return 1
    if isinstance(node, (Product, Quotient)):
        return 2
    if isinstance(node, Power):
        return 3
    return 4


def to_text(node: Node) -> str:
    """Render an AST so that parse_expr(to_text(a)) == a."""
    if isinstance(node, Scalar):
        v = node.value
        if v.denominator == 1 and v >= 0:
            return str(v.numerator)
        inner = str(abs(v.numerator)) if v.denominator == 1 else f"{abs(v.numerator)}/{v.denominator}"
        return f"(0 - {inner})" if v < 0 else f"({inner})"
    if isinstance(node, MonomialNode):
        return _mono_str(node)
    if isinstance(node, Call):
        args = ", ".join(str(a) if isinstance(a, int) else _mono_str(a) for a in node.args)
        return f"{node.name}({args})"
    if isinstance(node, Power):
        base = to_text(node.base)
        # a bare monomial base would fuse with the exponent (q^2 is a monomial)
        if _prec(node.base) < 4 or isinstance(node.base, MonomialNode):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, (Product, Quotient)):
        op = "*" if isinstance(node, Product) else "/"
        left = to_text(node.left)
        right = to_text(node.right)
        if _prec(node.left) < 2:
            left = f"({left})"
        if _prec(node.right) <= 2:
            right = f"({right})"
        return f"{left}{op}{right}"
    if isinstance(node, Sum):
        left = to_text(node.left)
        right = to_text(node.right)
        if _prec(node.right) <= 1:
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------

def _eval(node: Node, c: BuildContext) -> LaurentSeries:
    if isinstance(node, Scalar):
        return c.const(node.value)
    if isinstance(node, MonomialNode):
        return c.q(node.exponent, node.sign)
    if isinstance(node, Call):
        a = node.args
        if node.name == "QF":
            return c.bqf(*a)
        if node.name == "f":
            return c.f((a[0].exponent, a[0].sign), (a[1].exponent, a[1].sign))
        return getattr(c, node.name)(a[0].exponent, a[0].sign)
    if isinstance(node, Power):
        base = _eval(node.base, c)
        if node.exponent >= 0:
            return base ** node.exponent
        return 1 / base ** (-node.exponent)
    if isinstance(node, Product):
        return _eval(node.left, c) * _eval(node.right, c)
    if isinstance(node, Quotient):
        return _eval(node.left, c) / _eval(node.right, c)
    if isinstance(node, Sum):
        left, right = _eval(node.left, c), _eval(node.right, c)
        return left + right if node.op == "+" else left - right
    raise TypeError(f"not an expression node: {node!r}")


def eval_expr(node: Union[Node, str], N: int) -> LaurentSeries:
    """Evaluate to order N.  Works at a slightly higher internal order so
    that divisions by series with leading zeros do not lose precision."""
    if isinstance(node, str):
        node = parse_expr(node)
    extra = 16
    while True:
        s = _eval(node, BuildContext(N + extra))
        if s.order >= N:
            return s.truncate(N)
        if extra > 4 * (N + 64):
            raise SeriesError(f"insufficient order: could not reach order {N}")
        extra *= 2

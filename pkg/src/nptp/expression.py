"""A small recursive-descent parser for one-variable target functions.

Grammar (highest binding last)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := primary ('^' unary)?          # right associative
    primary := NUMBER | 'x' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .exceptions import ExpressionSyntaxError, UnknownIdentifierError

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "abs": np.abs,
}
CONSTANTS = {"pi": math.pi, "e": math.e}
BINARY = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": np.divide,
    "^": np.power,
}
# printing precedence; atoms bind tightest
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}
_ATOM = 5

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str  # "neg" or a name from FUNCTIONS
    operand: object


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ExpressionSyntaxError(f"unexpected character {text[col - 1]!r}", col)
        kind = match.lastgroup
        start = match.start(kind) + 1
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, col = self.take()
        if text != value or kind != "op":
            found = "end of input" if kind == "end" else repr(text)
            raise ExpressionSyntaxError(f"expected {value!r}, found {found}", col)

    def parse(self):
        node = self.expr()
        kind, text, col = self.peek()
        if kind != "end":
            raise ExpressionSyntaxError(f"unexpected {text!r}", col)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Binary(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Binary(op, node, self.unary())
        return node

    def unary(self):
        kind, text, _ = self.peek()
        if kind == "op" and text in ("-", "+"):
            self.take()
            operand = self.unary()
            return Unary("neg", operand) if text == "-" else operand
        return self.power()

    def power(self):
        base = self.primary()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.take()
            return Binary("^", base, self.unary())
        return base

    def primary(self):
        kind, text, col = self.take()
        if kind == "num":
            return Num(float(text))
        if kind == "name":
            if text == "x":
                return Var()
            if text in CONSTANTS:
                return Const(text)
            if text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Unary(text, arg)
            raise UnknownIdentifierError(text, col)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(text)
        raise ExpressionSyntaxError(f"unexpected {found}", col)


def parse_expression(text: str):
    """Parse ``text`` into an expression tree.

    Raises
    ------
    ExpressionSyntaxError
        With a 1-based ``column`` pointing at the offending token.
    UnknownIdentifierError
        For names other than ``x``, ``pi``, ``e`` and the supported functions.
    """
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression", 1)
    return _Parser(text).parse()


def evaluate_ast(node, x):
    if isinstance(node, Num):
        return np.full(np.shape(x), node.value)[()]
    if isinstance(node, Var):
        return x
    if isinstance(node, Const):
        return np.full(np.shape(x), CONSTANTS[node.name])[()]
    if isinstance(node, Unary):
        v = evaluate_ast(node.operand, x)
        return np.negative(v) if node.op == "neg" else FUNCTIONS[node.op](v)
    if isinstance(node, Binary):
        return BINARY[node.op](evaluate_ast(node.left, x), evaluate_ast(node.right, x))
    raise TypeError(f"not an expression node: {node!r}")


def _prec(node):
    if isinstance(node, Binary):
        return _PREC[node.op]
    if isinstance(node, Unary) and node.op == "neg":
        return _PREC["neg"]
    return _ATOM


def to_text(node) -> str:
    """Render a tree with the minimum parentheses needed to reparse it."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Unary):
        if node.op == "neg":
            inner = to_text(node.operand)
            return f"-({inner})" if _prec(node.operand) < _PREC["neg"] else f"-{inner}"
        return f"{node.op}({to_text(node.operand)})"
    prec = _PREC[node.op]
    left, right = to_text(node.left), to_text(node.right)
    if _prec(node.left) < prec or (node.op == "^" and _prec(node.left) == prec):
        left = f"({left})"
    if _prec(node.right) < prec or (node.op != "^" and _prec(node.right) == prec):
        right = f"({right})"
    sep = " " if node.op in "+-" else ""
    return f"{left}{sep}{node.op}{sep}{right}"


class Expression:
    """Parsed expression usable as a vectorised function of ``x``."""

    def __init__(self, text):
        self.text = text
        self.ast = parse_expression(text)

    def __call__(self, x):
        return evaluate_ast(self.ast, np.asarray(x, dtype=float))

    def __repr__(self):
        return f"Expression({self.text!r})"

"""Expression grammar shared by every text input.

Scalar literals are integers, ``p/q`` and ``zeta(N)``; identifiers are
variables; ``+ - * / ^`` and parentheses combine them.  The parser builds
a small AST which is then interpreted in whatever ring the caller needs:
commutative polynomials, matrices (non-commutative words) or octonions
(non-associative; nested products must be parenthesised).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self.annotated())

    def annotated(self) -> str:
        return f"{self.message} at position {self.pos}\n  {self.text}\n  {' ' * self.pos}^"


@dataclass(frozen=True)
class Node:
    kind: str  # num, zeta, var, add, sub, mul, div, pow, neg
    args: tuple = ()
    value: object = None
    pos: int = 0
    paren: bool = field(default=False, compare=False)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", self.text, tok[2])
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> Node:
        if self.peek()[0] == "end":
            self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            _, op, pos = self.take()
            rhs = self.term()
            node = Node("add" if op == "+" else "sub", (node, rhs), pos=pos)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            rhs = self.unary()
            node = Node("mul" if op == "*" else "div", (node, rhs), pos=pos)
        return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return inner if tok[1] == "+" else Node("neg", (inner,), pos=tok[2])
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            _, _, pos = self.take()
            neg = False
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be an integer literal", tok)
            return Node("pow", (base,), value=-tok[1] if neg else tok[1], pos=pos)
        return base

    def atom(self) -> Node:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return Node("num", value=val, pos=pos)
        if kind == "name":
            if val == "zeta" and self.peek()[0] == "op" and self.peek()[1] == "(":
                self.take()
                n = self.take()
                if n[0] != "int" or n[1] < 1:
                    self.error("zeta needs a positive integer level", n)
                self.expect(")")
                return Node("zeta", value=n[1], pos=pos)
            return Node("var", value=val, pos=pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return Node(inner.kind, inner.args, inner.value, inner.pos, paren=True)
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {val!r}", tok)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST, raising ParseError with a position."""
    return _Parser(text).parse()


def variables(node: Node) -> set[str]:
    if node.kind == "var":
        return {node.value}
    out: set[str] = set()
    for a in node.args:
        out |= variables(a)
    return out


def evaluate(
    node: Node,
    *,
    var: Callable[[str, Node], object],
    scalar: Callable[[object], object],
    mul: Callable[[object, object], object] | None = None,
    power: Callable[[object, int], object] | None = None,
    divide: Callable[[object, object, Node], object] | None = None,
):
    """Interpret an AST.

    ``var`` maps identifiers to ring elements, ``scalar`` turns a
    CycloNum into a ring element.  Addition and negation use the ring's
    operators; multiplication, powers and division can be overridden.
    """
    from .scalars import CycloNum, cyclo_make

    mul = mul or (lambda x, y: x * y)
    power = power or (lambda x, e: x**e)

    def go(n: Node):
        k = n.kind
        if k == "num":
            return scalar(CycloNum(n.value))
        if k == "zeta":
            return scalar(cyclo_make(n.value))
        if k == "var":
            return var(n.value, n)
        if k == "neg":
            return -go(n.args[0])
        if k == "add":
            return go(n.args[0]) + go(n.args[1])
        if k == "sub":
            return go(n.args[0]) - go(n.args[1])
        if k == "mul":
            return mul(go(n.args[0]), go(n.args[1]))
        if k == "div":
            if divide is None:
                raise ValueError("division is not supported here")
            return divide(go(n.args[0]), go(n.args[1]), n)
        if k == "pow":
            return power(go(n.args[0]), n.value)
        raise AssertionError(k)

    return go(node)


def scalar_value(node: Node, text: str = ""):
    """Evaluate a variable-free AST to a CycloNum."""

    def no_var(name, n):
        raise ParseError(f"unexpected variable {name!r} in scalar literal", text, n.pos)

    def div(a, b, n):
        if b.is_zero():
            raise ParseError("division by zero", text, n.pos)
        return a / b

    return evaluate(node, var=no_var, scalar=lambda c: c, divide=div)


def parse_scalar(text: str):
    return scalar_value(parse(text), text)

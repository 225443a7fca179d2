"""Expressions over elements: literals, ``I``/``p``/``q``, ``*`` and ``^-1``.

    expr    := postfix ("*" postfix)*
    postfix := atom ("^-1")*
    atom    := literal | "I" | "p" | "q" | "(" expr ")"

``*`` is left associative and means "apply the left operand first";
``^-1`` binds tighter than ``*``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .codec import NAMED, Scanner, parse_literal
from .core import PartialBijection


@dataclass(frozen=True)
class Literal:
    value: PartialBijection


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Compose:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Inverse:
    operand: "Expr"


Expr = Literal | Name | Compose | Inverse


def _atom(sc: Scanner) -> Expr:
    sc.skip()
    if sc.peek("{"):
        return Literal(parse_literal(sc))
    if sc.accept("("):
        node = _expr(sc)
        sc.expect(")")
        return node
    for name in NAMED:
        if sc.accept(name):
            return Name(name)
    raise sc.error("expected an element, a name or '('")


def _postfix(sc: Scanner) -> Expr:
    node = _atom(sc)
    while sc.accept("^"):
        sc.expect("-")
        if sc.integer() != 1:
            raise sc.error("only the exponent -1 is supported")
        node = Inverse(node)
    return node


def _expr(sc: Scanner) -> Expr:
    node = _postfix(sc)
    while sc.accept("*"):
        node = Compose(node, _postfix(sc))
    return node


def parse(text: str) -> Expr:
    sc = Scanner(text)
    node = _expr(sc)
    if not sc.at_end():
        raise sc.error("unexpected input")
    return node


def evaluate(node: Expr) -> PartialBijection:
    match node:
        case Literal(value):
            return value
        case Name(name):
            return NAMED[name]
        case Compose(left, right):
            return evaluate(left) * evaluate(right)
        case Inverse(operand):
            return evaluate(operand).inverse()
    raise TypeError(f"not an expression node: {node!r}")


def eval_expr(text: str) -> PartialBijection:
    return evaluate(parse(text))

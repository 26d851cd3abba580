# -*- coding: utf-8 -*-
"""
Series expressions
==================

Grammar for series given on the command line, e.g. ``"1/(1-x-x^2)"`` or ``"sqrt(1+4*x)"``:

* integer literals, the variable ``x``, ``sqrt(...)``;
* binary ``+ - * /`` with the usual precedence, unary ``+ -``;
* integer powers ``^k``, possibly negative.

Expressions are parsed once into a tree, which is expanded to any truncation order.
"""
from fractions import Fraction
from functools import lru_cache

from pyparsing import (
    Forward,
    Keyword,
    Optional,
    ParseException,
    Regex,
    Suppress,
    ZeroOrMore,
    one_of,
)

from .fps import Series, series_inv, series_mul, series_pow, series_sqrt


class ParseError(ValueError):
    """Raised when an expression does not follow the series grammar."""

    pass


class Number:
    def __init__(self, value):
        self.value = Fraction(value)

    def __repr__(self):
        return f"Number({self.value})"

    def expand(self, order):
        return Series.constant(self.value, order)


class Variable:
    def __repr__(self):
        return "Variable(x)"

    def expand(self, order):
        return Series.x(order)


class SquareRoot:
    def __init__(self, argument):
        self.argument = argument

    def __repr__(self):
        return f"SquareRoot({self.argument!r})"

    def expand(self, order):
        return series_sqrt(self.argument.expand(order))


class Power:
    def __init__(self, base, exponent):
        self.base = base
        self.exponent = int(exponent)

    def __repr__(self):
        return f"Power({self.base!r}, {self.exponent})"

    def expand(self, order):
        return series_pow(self.base.expand(order), self.exponent)


class Negation:
    def __init__(self, operand):
        self.operand = operand

    def __repr__(self):
        return f"Negation({self.operand!r})"

    def expand(self, order):
        return -self.operand.expand(order)


class Operator:
    def __init__(self, op, lhs, rhs):
        self.op = op
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return f"Operator({self.op}, {self.lhs!r}, {self.rhs!r})"

    def expand(self, order):
        lhs, rhs = self.lhs.expand(order), self.rhs.expand(order)
        if self.op == "+":
            return lhs + rhs
        if self.op == "-":
            return lhs - rhs
        if self.op == "*":
            return series_mul(lhs, rhs)
        # Division requires a nonzero constant term in the denominator
        return series_mul(lhs, series_inv(rhs))


def _fold(toks):
    """Left-associative folding of ``operand (op operand)*``."""
    toks = list(toks)
    node = toks[0]
    for op, rhs in zip(toks[1::2], toks[2::2]):
        node = Operator(op, node, rhs)
    return node


def _unary(toks):
    toks = list(toks)
    node = toks[-1]
    for sign in reversed(toks[:-1]):
        if sign == "-":
            node = Negation(node)
    return node


def _power(toks):
    if len(toks) == 1:
        return toks[0]
    return Power(toks[0], toks[1])


@lru_cache(maxsize=1)
def make_grammar():
    """Build the expression grammar."""
    expr = Forward()
    lpar, rpar = Suppress("("), Suppress(")")

    number = Regex(r"\d+").set_parse_action(lambda toks: Number(int(toks[0])))
    variable = Keyword("x").set_parse_action(lambda toks: Variable())
    root = (Suppress(Keyword("sqrt")) + lpar + expr + rpar).set_parse_action(
        lambda toks: SquareRoot(toks[0])
    )
    atom = root | variable | number | (lpar + expr + rpar)

    exponent = Regex(r"[+-]?\d+") | (lpar + Regex(r"[+-]?\d+") + rpar)
    power = (atom + Optional(Suppress("^") + exponent)).set_parse_action(_power)
    unary = (ZeroOrMore(one_of("+ -")) + power).set_parse_action(_unary)
    term = (unary + ZeroOrMore(one_of("* /") + unary)).set_parse_action(_fold)
    expr <<= (term + ZeroOrMore(one_of("+ -") + term)).set_parse_action(_fold)
    return expr


def parse_expression(text):
    """
    Parse an expression into a tree whose ``expand(order)`` method computes the series.

    Raises
    ------
    ParseError
        if ``text`` does not follow the grammar.
    """
    try:
        return make_grammar().parse_string(text, parse_all=True)[0]
    except ParseException as e:
        raise ParseError(f"Invalid series expression {text!r}: {e}")


def parse_series_expr(text, order=16):
    """
    Parse an expression and expand it to a series known through ``order``.

    Parameters
    ----------
    text : str
        Expression, e.g. ``"1/(1-x-x^2)"``.
    order : int, optional
        Truncation order.

    Returns
    -------
    s : Series

    Raises
    ------
    ParseError
        if ``text`` does not follow the grammar.
    ZeroConstantTerm
        if a denominator or a negative power has a vanishing constant term, or a square root
        is taken of a series without constant term.
    NonSquareConstant
        if a square root is taken of a series whose constant term is not a rational square.
    """
    return parse_expression(text).expand(order)

# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from fibriordan import (
    NonSquareConstant,
    ParseError,
    Series,
    ZeroConstantTerm,
    parse_series_expr,
)
from fibriordan.parser import parse_expression


def test_fibonacci_expression():
    """Test the expansion of the Fibonacci generating function"""
    assert parse_series_expr("1/(1-x-x^2)", 6).coeffs == (1, 1, 2, 3, 5, 8, 13)


def test_sqrt_expression():
    """Test the expansion of sqrt(1 + 4x)"""
    assert parse_series_expr("sqrt(1+4*x)", 4).coeffs == (1, 2, -2, 4, -10)


@pytest.mark.parametrize(
    "text, order, expected",
    [
        ("1+2*x^2", 3, [1, 0, 2, 0]),
        ("-x^2", 2, [0, 0, -1]),
        ("--x", 1, [0, 1]),
        ("2 - x - x", 1, [2, -2]),
        ("5-2-1", 0, [2]),
        ("8/2/2", 0, [2]),
        ("6/4", 0, [Fraction(3, 2)]),
        ("(1-x)^-2", 3, [1, 2, 3, 4]),
        ("(1+x)^(-1)", 3, [1, -1, 1, -1]),
        ("x*x+x", 2, [0, 1, 1]),
        ("2^3*x", 1, [0, 8]),
    ],
)
def test_precedence(text, order, expected):
    """Test operator precedence, associativity and unary signs"""
    assert parse_series_expr(text, order) == Series(expected, order=order)


def test_expression_tree_orders():
    """Test that a parsed expression can be expanded to any order"""
    tree = parse_expression("1/(1-x)")
    assert tree.expand(2) == Series([1, 1, 1])
    assert tree.expand(5) == Series([1] * 6)


@pytest.mark.parametrize("text", ["", "1+", "y", "x^x", "sqrt 2", "1.5", "(1+x", "1+x)", "x^"])
def test_parse_error(text):
    """Test that malformed expressions raise a ParseError, which is a ValueError"""
    with pytest.raises(ParseError):
        parse_series_expr(text, 4)
    with pytest.raises(ValueError):
        parse_series_expr(text, 4)


@pytest.mark.parametrize("text", ["1/x", "x^-1", "sqrt(x)", "1/(x+x^2)"])
def test_zero_constant_term(text):
    """Test that denominators, negative powers and square roots require a constant term"""
    with pytest.raises(ZeroConstantTerm):
        parse_series_expr(text, 4)


def test_non_square_constant():
    """Test that square roots require a rational square constant term"""
    with pytest.raises(NonSquareConstant):
        parse_series_expr("sqrt(2+x)", 4)
    assert parse_series_expr("sqrt(4+x)", 0) == Series([2])

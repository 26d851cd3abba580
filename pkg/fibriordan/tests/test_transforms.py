# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest
from hypothesis import given, settings

from fibriordan import (
    InsufficientOrder,
    Poly,
    Series,
    catalan_power_check,
    catalan_series,
    type1_context,
    type1_cs,
    type1_cs_check,
    type1_pseudo_involution_check,
    type1_quadratic_check,
    type2_column_split_check,
    type2_context,
    type2_parity_check,
    type2_pseudo_involution_check,
    type2_quadratic_check,
    type2_root_check,
    type2_special_cases_check,
    type2_tu,
    type2_tu_check,
)

from . import rationals

PARAMETERS = [(1, 3), (Fraction(1, 2), -1), (0, 3), (3, -2), (Fraction(-2, 3), Fraction(-5, 7))]


@pytest.fixture(params=PARAMETERS)
def parameters(request):
    return request.param


def test_type1_cs_values():
    """Test the first decomposition for (phi, beta) = (2, 1), where the radical is sqrt(1 + 4x)"""
    ctx = type1_context(2, 1, 8)
    assert type1_cs(ctx, 0) == (Poly([2]), Poly())
    assert type1_cs(ctx, 1) == (Poly([1, 2]), Poly([1]))


def test_type1_preconditions():
    """Test that decompositions require 2n <= order"""
    ctx = type1_context(1, 1, 4)
    with pytest.raises(InsufficientOrder):
        type1_cs(ctx, 3)
    with pytest.raises(ValueError):
        type1_cs(ctx, -1)


def test_type1(parameters):
    """Test that series route and closed forms agree, and the quadratic relation holds"""
    ctx = type1_context(*parameters, 16)
    assert ctx.consistency()
    for n in range(9):
        assert type1_cs_check(ctx, n)
        assert type1_quadratic_check(ctx, n)


def test_type1_pseudo_involutions(parameters):
    """Test the pseudo-involution relations of the first type"""
    ctx = type1_context(*parameters, 10)
    report = type1_pseudo_involution_check(ctx, 10)
    assert report, report.failures
    with pytest.raises(InsufficientOrder):
        type1_pseudo_involution_check(ctx, 13)


@settings(deadline=None, max_examples=10)
@given(rationals, rationals)
def test_type1_random(phi, beta):
    """Test the first decomposition on random parameters"""
    ctx = type1_context(phi, beta, 12)
    assert all(type1_cs_check(ctx, n) for n in range(7))


def test_catalan_series():
    """Test the first Catalan numbers"""
    assert catalan_series(7).coeffs == (1, 1, 2, 5, 14, 42, 132, 429)


@pytest.mark.parametrize("k", range(-5, 7))
def test_catalan_powers(k):
    """Test the expression of powers of C(x^2) through C(x^2) and polynomials"""
    assert catalan_power_check(k, 16)


def test_catalan_powers_order():
    """Test that powers of the Catalan series require enough coefficients"""
    with pytest.raises(InsufficientOrder):
        catalan_power_check(7, 16)


def test_type2_tu_values():
    """Test the second decomposition for (phi, beta) = (1, 1)"""
    ctx = type2_context(1, 1, 8)
    assert type2_tu(ctx, 2) == (Poly([1, 0, 1]), Poly([0, 2]))


def test_type2(parameters):
    """Test that series route and closed forms agree, with the quadratic relation and parities"""
    ctx = type2_context(*parameters, 16)
    assert ctx.consistency()
    for n in range(9):
        assert type2_tu_check(ctx, n)
        assert type2_quadratic_check(ctx, n)
        assert type2_parity_check(ctx, n)


def test_type2_roots(parameters):
    """Test the product forms of the second decomposition"""
    assert all(type2_root_check(*parameters, n) for n in range(11))


@pytest.mark.parametrize("phi, beta", [(1, 1), (1, 0), (2, 3), (Fraction(18, 13), Fraction(4, 9)), (17, 0), (0, 1)])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_type2_roots_without_factors(phi, beta, n):
    """Test the product forms of the second decomposition at small indices, where products may be empty"""
    assert type2_root_check(phi, beta, n)


def test_type2_pseudo_involutions(parameters):
    """Test the pseudo-involution relations of the second type"""
    ctx = type2_context(*parameters, 10)
    report = type2_pseudo_involution_check(ctx, 10)
    assert report, report.failures


def test_type2_column_split(parameters):
    """Test that the even and odd columns of the radical pairs are stretched pairs"""
    assert type2_column_split_check(*parameters, 10)


def test_type2_special_cases():
    """Test the special values of the second decomposition"""
    report = type2_special_cases_check(6, 12)
    assert report, report.failures
    assert len(report) == 4 * 7
    with pytest.raises(InsufficientOrder):
        type2_special_cases_check(6, 10)


def test_type2_contexts_series():
    """Test the companion series of 1/sqrt(1 - 2x) at (phi, beta) = (1, 0)"""
    ctx = type2_context(1, 0, 6)
    # b = x + sqrt(1 + x^2)
    assert ctx.b == Series([0, 1], order=6) + Series([1, 0, Fraction(1, 2), 0, Fraction(-1, 8), 0, Fraction(1, 16)])

# -*- coding: utf-8 -*-
import json
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibriordan import (
    BadConstantTerm,
    BadValuation,
    ExactMatrix,
    InsufficientOrder,
    LowerMatrix,
    NotProper,
    Series,
    companion_b,
    conjugate_by_M,
    euler_transform,
    identity_pair,
    make_pair,
    pair_apply,
    pair_inverse,
    pair_to_matrix,
    pascal_power,
    pseudo_eigen_check,
    row_gf,
    series_compose,
    series_inv,
    series_mul_xpow,
    shift_polynomial,
    sign_involution,
    verify_theorem1,
)
from fibriordan.fps import Poly

from . import rationals, series

SETTINGS = dict(deadline=None, max_examples=10)


def proper_pair(f, a):
    """The pair (f, x a)"""
    return make_pair(f, series_mul_xpow(a, 1).truncate(f.order))


def test_pascal_matrix():
    """Test that the first rows of the Pascal matrix are binomial coefficients"""
    matrix = pair_to_matrix(pascal_power(1, 5), 6)
    assert isinstance(matrix, LowerMatrix)
    assert matrix.row_poly(5) == Poly([1, 5, 10, 10, 5, 1])
    assert row_gf(pascal_power(2, 3), 3) == Poly([8, 12, 6, 1])


def test_pair_to_matrix_insufficient_order():
    """Test that a pair cannot be realized with more rows than its order allows"""
    with pytest.raises(InsufficientOrder):
        pair_to_matrix(pascal_power(1, 3), 5)
    with pytest.raises(ValueError):
        pair_to_matrix(pascal_power(1, 3), 0)


def test_pair_second_series_valuation():
    """Test that the second series of a pair must vanish at zero"""
    with pytest.raises(BadValuation):
        make_pair(Series.one(3), Series([1, 1], order=3))


def test_pair_inverse_not_proper():
    """Test that stretched pairs cannot be inverted"""
    with pytest.raises(NotProper):
        pair_inverse(make_pair(Series.one(4), Series([0, 0, 1], order=4)))


def test_sign_involution():
    """Test that M = (1, -x) is an involution and conjugates by signs"""
    M = sign_involution(6)
    assert M @ M == identity_pair(6)
    P = pascal_power(1, 6)
    assert M @ P @ M == conjugate_by_M(P)
    assert pair_to_matrix(conjugate_by_M(P), 7) == pair_to_matrix(P, 7).sign_conjugate()
    assert conjugate_by_M(P) == pascal_power(-1, 6)


def test_euler_transform():
    """Test that the binomial transform of 1/(1 - x) is 1/(1 - 2x)"""
    a = series_inv(Series([1, -1], order=6))
    assert euler_transform(1, a) == series_inv(Series([1, -2], order=6))


def test_pascal_pseudo_eigen():
    """Test that P^phi A = M A M for A = P^(-phi/2)"""
    phi = Fraction(3, 2)
    assert pseudo_eigen_check(pascal_power(-phi / 2, 8), phi, 9, side="left")
    assert not pseudo_eigen_check(pascal_power(1, 8), phi, 9, side="left")
    with pytest.raises(ValueError):
        pseudo_eigen_check(pascal_power(1, 8), phi, 9, side="middle")


def test_companion_series():
    """Test that the companion of the Catalan series C is 1/(1 - x), since C = 1/(1 - x C)"""
    catalan = Series([1, 1, 2, 5, 14, 42, 132, 429], order=7)
    assert companion_b(catalan) == series_inv(Series([1, -1], order=7))
    with pytest.raises(BadConstantTerm):
        companion_b(Series([2, 1], order=3))


def test_exact_matrix():
    """Test exact matrix operations"""
    m = ExactMatrix([["1/2", 1], [0, -3]])
    assert m.transpose() == ExactMatrix([[Fraction(1, 2), 0], [1, -3]])
    assert m @ ExactMatrix.identity(2) == m
    assert 2 * m == ExactMatrix([[1, 2], [0, -6]])
    assert m.scale_columns([2, 0]) == ExactMatrix([[1, 0], [0, 0]])
    assert ExactMatrix.diagonal([1, 2]) == ExactMatrix([[1, 0], [0, 2]])
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        m @ ExactMatrix([[1, 2, 3]])
    with pytest.raises(ValueError):
        LowerMatrix([[1, 1], [0, 1]])


def test_exact_matrix_export():
    """Test the JSON and CSV export of matrices"""
    m = ExactMatrix([["1/2", 1], [0, -3]])
    assert json.loads(m.to_json())["entries"] == [["1/2", "1"], ["0", "-3"]]
    assert ExactMatrix.from_json(m.to_json()) == m
    assert m.to_csv() == "1/2,1\n0,-3\n"


@pytest.mark.parametrize(
    "document",
    [
        '{"rows": 1, "cols": 1, "entries": [[1]]}',
        '{"cols": 1, "entries": [["1"]]}',
        '{"rows": 2, "cols": 1, "entries": [["1"]]}',
        '{"rows": 2, "cols": 2, "entries": [["1", "0"], ["1"]]}',
    ],
)
def test_exact_matrix_json_malformed(document):
    """Test that malformed matrix documents raise a ValueError"""
    with pytest.raises(ValueError):
        ExactMatrix.from_json(document)


@settings(**SETTINGS)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=1, max_size=5)))
def test_exact_matrix_json(entries):
    """Test that matrices are recovered from their JSON documents"""
    m = ExactMatrix(entries)
    assert ExactMatrix.from_json(m.to_json()) == m


def test_inverse_lower():
    """Test forward substitution against the inverse Pascal matrix"""
    P = pair_to_matrix(pascal_power(1, 5), 6)
    assert P.inverse_lower() == pair_to_matrix(pascal_power(-1, 5), 6)


@settings(**SETTINGS)
@given(series(7), series(7), series(7), series(7))
def test_group_law(f1, a1, f2, a2):
    """Test that the matrix of a product of pairs is the product of matrices"""
    p, q = proper_pair(f1, a1), proper_pair(f2, a2)
    assert pair_to_matrix(p @ q, 8) == pair_to_matrix(p, 8) @ pair_to_matrix(q, 8)


@settings(**SETTINGS)
@given(series(7), series(7))
def test_pair_inverse(f, a):
    """Test that a proper pair times its inverse is the identity"""
    p = proper_pair(f, a)
    assert p @ pair_inverse(p) == identity_pair(7)
    assert pair_inverse(p) @ p == identity_pair(7)


@settings(**SETTINGS)
@given(series(7), series(7), series(7))
def test_fundamental_theorem(f, a, b):
    """Test that the action of a pair on a series is the matrix acting on coefficients"""
    p = proper_pair(f, a)
    image = pair_apply(p, b)
    matrix = pair_to_matrix(p, 8)
    for n in range(8):
        assert image[n] == sum(matrix[n, k] * b[k] for k in range(8))


@settings(**SETTINGS)
@given(series(8, constant=1))
def test_companion_identity(a):
    """Test that b(x a(x)) = a(x) for the companion series b"""
    b = companion_b(a)
    assert series_compose(b, series_mul_xpow(a, 1).truncate(8)) == a


@settings(**SETTINGS)
@given(series(8, constant=1))
def test_theorem1(a):
    """Test the companion-series identities on random series"""
    report = verify_theorem1(a, 8)
    assert report, report.failures
    assert len(report) == 5


def test_theorem1_preconditions():
    """Test that the companion identities require a(0) = 1 and enough coefficients"""
    with pytest.raises(BadConstantTerm):
        verify_theorem1(Series([2, 1], order=4), 4)
    with pytest.raises(InsufficientOrder):
        verify_theorem1(Series([1, 1], order=3), 4)


def test_theorem1_catalan():
    """Test the companion identities on the Catalan series"""
    catalan = Series([1, 1, 2, 5, 14, 42, 132, 429, 1430], order=8)
    assert verify_theorem1(catalan, 8)


def test_theorem1_order64():
    """Test the companion identities on 1/(1 - x + x^2) through order 64, in a few seconds"""
    a = series_inv(Series([1, -1, 1], order=64))
    start = time.perf_counter()
    report = verify_theorem1(a, 32)
    assert report, report.failures
    assert time.perf_counter() - start < 5


def test_shift_polynomial():
    """Test the shift operator c(x) -> c(x + phi)"""
    assert shift_polynomial(Poly([0, 0, 1]), 1) == Poly([1, 2, 1])
    # C_3(x + 1) = D_3(x + 1, 1)
    assert shift_polynomial(Poly([0, -3, 0, 1]), 1) == Poly([-2, 0, 3, 1])
    assert shift_polynomial(Poly([1, 2]), 0) == Poly([1, 2])
    assert shift_polynomial(Poly(), 3) == Poly()


@settings(**SETTINGS)
@given(st.lists(rationals, max_size=8), rationals)
def test_shift_polynomial_inverse(coeffs, phi):
    """Test that shifting by phi then by -phi gives back the polynomial"""
    c = Poly(coeffs)
    assert shift_polynomial(shift_polynomial(c, phi), -phi) == c

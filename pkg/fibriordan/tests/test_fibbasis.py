# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest
from hypothesis import given, settings

from fibriordan import (
    BasisKind,
    ExactMatrix,
    InsufficientOrder,
    LowerMatrix,
    Poly,
    Series,
    algebraic_relations_check,
    apply_B,
    build_basis,
    coordinates_in_B,
    duality_check,
    example2_check,
    example3_check,
    golden_ratio_check,
    kernel_check,
    pairing,
    right_inverse_B,
    right_inverse_check,
    right_inverse_column,
    row_formula,
    row_formula_check,
    series_inv,
    signature_check,
    theorem4_check,
)

from . import rationals, series

# Leading rows of the classic bases
BASIS_A = [
    [2, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0],
    [1, -1, 2, 0, 0, 0, 0],
    [-1, 1, -3, 1, 0, 0, 0],
    [1, -1, 4, -2, 2, 0, 0],
    [-1, 1, -5, 3, -5, 1, 0],
    [1, -1, 6, -4, 9, -3, 2],
]

BASIS_B = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 2, 1, 1, 0, 0, 0],
    [0, 0, 1, 3, 1, 1, 0],
    [0, 0, 0, 2, 2, 4, 1],
    [0, 0, 0, 0, 1, 5, 3],
    [0, 0, 0, 0, 0, 2, 3],
    [0, 0, 0, 0, 0, 0, 1],
]


def test_basis_kind():
    """Test the properties of basis kinds"""
    assert BasisKind("A-gen").series_columns
    assert BasisKind("A-gen").general
    assert not BasisKind.B_RED.series_columns
    assert not BasisKind.B_RED.general
    with pytest.raises(ValueError):
        BasisKind("C")


def test_classic_a():
    """Test the leading rows of the classic basis A"""
    matrix = build_basis(BasisKind.A, n_cols=7, N=6).to_matrix()
    assert isinstance(matrix, LowerMatrix)
    assert matrix == ExactMatrix(BASIS_A)
    # Odd columns are those of (x/(1 + x), x^2/(1 + x))
    assert matrix[5, 1] == 1
    assert matrix[6, 1] == -1


def test_classic_b():
    """Test the leading block of the classic basis B"""
    basis = build_basis(BasisKind.B, n_cols=7)
    assert basis.to_matrix() == ExactMatrix(BASIS_B)
    assert basis.column(3) == Poly([0, 1, 3, 2])


def test_basis_errors():
    """Test invalid uses of bases"""
    with pytest.raises(ValueError):
        build_basis(BasisKind.A, n_cols=0)
    with pytest.raises(InsufficientOrder):
        build_basis(BasisKind.A, n_cols=8, N=6).to_matrix()
    with pytest.raises(InsufficientOrder):
        build_basis(BasisKind.B, n_cols=3).apply(Poly([0, 0, 0, 1]))
    with pytest.raises(ValueError):
        build_basis(BasisKind.B_GEN, 1, 2, n_cols=4).apply(Series.one(4))


def test_basis_apply():
    """Test that bases map x^n to their columns"""
    basis = build_basis(BasisKind.A, n_cols=6, N=5)
    assert basis.apply(Poly([0, 0, 1])) == basis.column(2)
    assert basis.apply(Series.one(5)) == Series([2, -1, 1, -1, 1, -1])

    basis = build_basis(BasisKind.B, n_cols=6)
    assert basis.apply(Poly([1, 0, 0, 1])) == Poly([1, 1, 3, 2])


def test_pairing():
    """Test the pairing between series and polynomials"""
    assert pairing(Series([1, 2, 3]), Poly([1, 1, 1])) == 6
    assert pairing(Series([1]), Poly()) == 0
    with pytest.raises(InsufficientOrder):
        pairing(Series([1]), Poly([0, 1]))


@pytest.mark.parametrize("family", ["classic", "reduced"])
def test_duality(family):
    """Test that A and B are dual, up to a factor of 2 for the classic bases"""
    report = duality_check(family, n_max=12, N=12)
    assert report, report.failures


@pytest.mark.parametrize("phi, beta", [(1, 2), (Fraction(-1, 2), 3), (0, -1)])
def test_duality_general(phi, beta):
    """Test the duality of the generalized bases"""
    assert duality_check("general", phi, beta, n_max=8, N=8)


def test_duality_errors():
    """Test invalid duality checks"""
    with pytest.raises(ValueError):
        duality_check("unknown")
    with pytest.raises(InsufficientOrder):
        duality_check("classic", n_max=12, N=10)


def test_row_formula_values():
    """Test closed forms of the first rows"""
    assert row_formula(BasisKind.A, n=3) == Poly([-1, 1, -3, 1])
    assert row_formula(BasisKind.B, n=1) == Poly([0, 2, 1, 1])
    assert row_formula(BasisKind.A_GEN, 3, 5, n=0) == Poly([1])
    assert row_formula(BasisKind.A_GEN, 3, 5, n=1) == Poly([Fraction(-3, 2), 1])
    # (1 + (phi/2) x)/(1 - beta x^2)
    expected = Series([1, Fraction(3, 2)], order=6) * series_inv(Series([1, 0, -5], order=6))
    assert row_formula(BasisKind.B_GEN, 3, 5, n=0, N=6) == expected
    with pytest.raises(ValueError):
        row_formula(BasisKind.A, n=-1)


@pytest.mark.parametrize("kind", ["A", "B", "A-red", "B-red"])
def test_row_formula_check(kind):
    """Test the closed forms of rows of the classic and reduced bases"""
    assert row_formula_check(kind, n_max=12, N=16)


@pytest.mark.parametrize("kind", ["A-gen", "B-gen"])
@pytest.mark.parametrize("phi, beta", [(1, 2), (Fraction(-1, 2), 3), (2, 0), (0, -1)])
def test_row_formula_check_general(kind, phi, beta):
    """Test the closed forms of rows of the generalized bases"""
    assert row_formula_check(kind, phi, beta, n_max=8, N=10)


def test_apply_B():
    """Test the action of B on 1 and x"""
    assert apply_B(Series.one(9), 4) == Series.one(4)
    assert apply_B(Series.x(9), 4) == Series([1, 2], order=4)
    assert apply_B(Series.one(4)).order == 1


def test_kernel():
    """Test that the kernel element sqrt(1 + 4x^2) - x is annihilated by B"""
    assert kernel_check(Series.one(16), 16)
    with pytest.raises(InsufficientOrder):
        kernel_check(Series.one(8), 16)


@settings(deadline=None, max_examples=10)
@given(series(12))
def test_kernel_random(c):
    """Test that c(x^2)(sqrt(1 + 4x^2) - x) is in the kernel of B for random c"""
    assert kernel_check(c, 12)


@pytest.mark.parametrize(
    "which, n, expected",
    [
        (1, 1, [0, 0, 1, 0, -1, 0, 2, 0, -5]),
        (1, 2, [0, 0, 0, 0, 1, 0, -2, 0, 5]),
        (1, 3, [0, 0, 0, 0, 0, 0, 1, 0, -3]),
        (2, 0, [0, 1, 0, -2, 0, 6, 0, -20]),
        (2, 1, [0, 0, 0, 1, 0, -3, 0, 10]),
        (2, 2, [0, 0, 0, 0, 0, 1, 0, -4]),
    ],
)
def test_right_inverse_columns(which, n, expected):
    """Test the leading columns of the right inverses of B"""
    column = right_inverse_column(which, n, 4)
    assert column.coeffs[: len(expected)] == tuple(expected)


@pytest.mark.parametrize("which", [1, 2])
def test_right_inverse(which):
    """Test that B maps the columns of its right inverses to x^n"""
    assert right_inverse_check(which, 16, 16)


def test_right_inverse_errors():
    """Test that there are only two right inverses"""
    with pytest.raises(ValueError):
        right_inverse_B(3)


@pytest.mark.parametrize("which", [1, 2])
def test_coordinates(which):
    """Test that coordinates of a series in B are mapped back to the series"""
    a = series_inv(Series([1, -1, -1], order=10))
    coordinates = coordinates_in_B(a, which, 10)
    assert coordinates.order == 21
    assert apply_B(coordinates, 10) == a


def test_coordinates_differ_by_kernel():
    """Test that both routes give coordinates differing by a kernel element"""
    a = Series([1, 2, 3], order=8)
    difference = coordinates_in_B(a, 1, 8) - coordinates_in_B(a, 2, 8)
    assert apply_B(difference, 8).is_zero()
    assert not difference.is_zero()


def test_example2_difference():
    """Test the coordinate difference of (1 + x) in B"""
    report = example2_check(1, 8)
    assert report, report.failures
    assert set(report.results) == {"closed_form", "first_route", "second_route", "difference", "kernel"}


@pytest.mark.parametrize("n", range(9))
def test_example2(n):
    """Test both coordinate routes of (1 + x)^n"""
    report = example2_check(n, 12)
    assert report, report.failures


@pytest.mark.parametrize("phi", [1, Fraction(-2, 3), 0])
def test_example3(phi):
    """Test the expansions of Pascal columns and rows in Lucas and Fibonacci polynomials"""
    for n in range(7):
        report = example3_check(phi, n, 12)
        assert report, report.failures


def test_theorem4():
    """Test the group law of the generalized bases"""
    report = theorem4_check(1, 2, -3, n_cols=8, N=8)
    assert report, report.failures
    assert len(report) == 4
    with pytest.raises(InsufficientOrder):
        theorem4_check(1, 2, -3, n_cols=10, N=8)


@settings(deadline=None, max_examples=5)
@given(rationals, rationals, rationals)
def test_theorem4_random(phi, beta1, beta2):
    """Test the group law of the generalized bases on random parameters"""
    assert theorem4_check(phi, beta1, beta2, n_cols=6, N=6)


def test_algebraic_relations():
    """Test the relations between bases, Pascal matrices and their inverses"""
    report = algebraic_relations_check(8)
    assert report, report.failures
    assert len(report) == 12


def test_golden_ratio():
    """Test the images of golden-ratio geometric series"""
    report = golden_ratio_check(12)
    assert report, report.failures


def test_signatures():
    """Test Fibonacci and Lucas sequences as images of geometric series"""
    report = signature_check(10)
    assert report, report.failures
    assert len(report) == 12
    assert report.results["odd_columns"]


def test_lucas_signature():
    """Test that B maps 1/(1 - x) to twice the shifted Fibonacci numbers"""
    image = apply_B(series_inv(Series([1, -1], order=21)), 10)
    assert image.coeffs == (2, 4, 6, 10, 16, 26, 42, 68, 110, 178, 288)

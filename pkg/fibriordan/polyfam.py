# -*- coding: utf-8 -*-
"""
Polynomial families
===================

Dickson polynomials :math:`D_n(x, \\beta)`, :math:`E_n(x, \\beta)` and their special cases:
modified Chebyshev polynomials :math:`C_n`, :math:`S_n`, Lucas polynomials :math:`L_n`
and Fibonacci polynomials :math:`F_n`.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .fps import FPSError, Poly, Series, rational_sqrt, NonSquareConstant, series_inv
from .report import CheckReport
from .riordan import euler_transform, make_pair, pair_apply, row_gf

LOG = logging.getLogger(__name__)


class UnsupportedIndex(FPSError):
    """Raised when a polynomial family has no convention for the requested index."""

    pass


class DegreeTooHigh(FPSError):
    """Raised when a polynomial degree exceeds the length of a reversal."""

    pass


class Family(str, Enum):
    """Polynomial families. D and E carry a parameter :math:`\\beta`; the others fix it."""

    C = "C"
    S = "S"
    D = "D"
    E = "E"
    L = "L"
    F = "F"

    @property
    def fixed_beta(self):
        """Value of :math:`\\beta` for the families that fix it, None otherwise."""
        return {"C": Fraction(1), "S": Fraction(1), "L": Fraction(-1), "F": Fraction(-1)}.get(
            self.value
        )

    @property
    def first_kind(self):
        """Whether the family is of the first kind (D, C, L)."""
        return self.value in {"C", "D", "L"}


def _beta(tag, beta):
    if tag.fixed_beta is not None:
        return tag.fixed_beta
    if beta is None:
        raise ValueError(f"Family {tag.value} requires a parameter beta")
    return Fraction(beta)


@lru_cache(maxsize=1024)
def _dickson(seed, n, beta):
    """Three-term recurrence p_k = x p_{k-1} - beta p_{k-2}, p_0 = seed, p_1 = x."""
    x = Poly.x()
    previous, current = Poly.constant(seed), x
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, x * current - previous * beta
    return current


def family_poly(tag, n, beta=None):
    """
    Polynomial of index ``n`` in a family.

    Parameters
    ----------
    tag : Family or str
        One of ``C, S, D, E, L, F``.
    n : int
        Index. Negative indices are supported for ``L``, ``F`` and ``S``:
        :math:`L_{-n} = (-1)^n L_n`, :math:`F_{-n} = (-1)^{n-1} F_n`,
        :math:`S_{-n} = -S_{n-2}` and :math:`S_{-1} = 0`.
    beta : rational, optional
        Parameter of the D and E families; ignored otherwise.

    Returns
    -------
    p : Poly

    Raises
    ------
    UnsupportedIndex
        if ``n`` is negative for the D, E or C families.
    """
    tag = Family(tag)
    beta = _beta(tag, beta)
    if n < 0:
        m = -n
        if tag == Family.L:
            return family_poly(tag, m) * (-1) ** m
        if tag == Family.F:
            return family_poly(tag, m) * (-1) ** (m - 1)
        if tag == Family.S:
            return Poly() if m == 1 else -family_poly(tag, m - 2)
        raise UnsupportedIndex(f"Family {tag.value} is not defined at negative index {n}")

    if tag == Family.F:
        return Poly() if n == 0 else _dickson(1, n - 1, beta)
    return _dickson(2 if tag.first_kind else 1, n, beta)


def reverse_J(c, n):
    """
    Reversal :math:`J_n c(x) = x^n c(1/x)`.

    Raises
    ------
    DegreeTooHigh
        if the degree of ``c`` exceeds ``n``.
    """
    if c.degree > n:
        raise DegreeTooHigh(f"Cannot reverse a polynomial of degree {c.degree} within length {n + 1}")
    return c.reverse(n)


def dickson_pair(tag, beta=None, order=16):
    """
    Riordan pair whose rows are the polynomials of a family:
    :math:`((1 - \\beta x^2)/(1 + \\beta x^2), x/(1 + \\beta x^2))` for the first kind,
    :math:`(1/(1 + \\beta x^2), x/(1 + \\beta x^2))` for the second kind.
    """
    tag = Family(tag)
    beta = _beta(tag, beta)
    denominator = series_inv(Series([1, 0, beta], order=order))
    g = Series([0, 1], order=order) * denominator
    if tag.first_kind:
        return make_pair(Series([1, 0, -beta], order=order) * denominator, g)
    return make_pair(denominator, g)


def family_row_check(tag, n, beta=None):
    """
    Whether the recurrence polynomial equals the corresponding Riordan matrix row.

    Row :math:`n` of the first-kind pair is :math:`D_n` for :math:`n > 0`; row 0 is 1 while
    :math:`D_0 = 2`. Fibonacci polynomials are compared to row :math:`n - 1` of the
    second-kind pair since :math:`F_n = E_{n-1}(\\cdot, -1)`.
    """
    tag = Family(tag)
    if n < 0:
        raise ValueError("Row checks require a nonnegative index")
    expected = family_poly(tag, n, beta)
    if tag == Family.F:
        if n == 0:
            return expected == Poly()
        n -= 1
    row = row_gf(dickson_pair(tag, beta, order=n), n)
    if tag.first_kind and n == 0:
        row = row + 1
    return row == expected


def family_gf(tag, phi, beta, N):
    """
    Generating function of the generalized Lucas (``"L"``) or Fibonacci (``"F"``) numbers:
    :math:`(2 - \\varphi x)/(1 - \\varphi x + \\beta x^2)` or :math:`x/(1 - \\varphi x + \\beta x^2)`.
    Coefficients are :math:`D_n(\\varphi, \\beta)` and :math:`E_{n-1}(\\varphi, \\beta)`.
    """
    tag = Family(tag)
    phi, beta = Fraction(phi), Fraction(beta)
    denominator = series_inv(Series([1, -phi, beta], order=N))
    if tag == Family.L:
        return Series([2, -phi], order=N) * denominator
    if tag == Family.F:
        return Series([0, 1], order=N) * denominator
    raise ValueError("Generating functions are defined for the L and F families only")


def _roots(tag, n, beta):
    """Closed-form roots of the family polynomial, as a complex numpy array."""
    scale = 2 * np.emath.sqrt(float(beta)) * np.ones(1, dtype=complex)
    if tag == Family.F:
        tag, n = Family.E, n - 1
    m = np.arange(1, n + 1)
    if tag.first_kind:
        angles = (2 * m - 1) * np.pi / (2 * n)
    else:
        angles = m * np.pi / (n + 1)
    return scale * np.cos(angles)


def root_form_check(tag, n, beta=None, tol=1e-9):
    """
    Numerical check of the product forms :math:`D_n(x, \\beta) = \\prod_m (x - 2\\sqrt{\\beta}\\cos\\frac{2m-1}{2n}\\pi)`
    and :math:`E_n(x, \\beta) = \\prod_m (x - 2\\sqrt{\\beta}\\cos\\frac{m}{n+1}\\pi)`.

    The exact polynomial is evaluated at each root; residuals are compared to ``tol`` relative to
    the magnitude of the evaluated terms. The expanded product is also compared to the exact coefficients.
    Negative :math:`\\beta` (e.g. Lucas and Fibonacci families) gives imaginary roots.

    Returns
    -------
    holds : bool
    """
    tag = Family(tag)
    if n < 1:
        raise ValueError("Root forms require n >= 1")
    beta = _beta(tag, beta)
    poly = family_poly(tag, n, beta)
    coeffs = poly.to_numpy()[::-1]  # highest degree first
    roots = _roots(tag, n, beta)

    values = np.polyval(coeffs, roots)
    scales = np.polyval(np.abs(coeffs), np.abs(roots))
    residuals_ok = bool(np.all(np.abs(values) <= tol * np.maximum(1.0, scales)))

    expanded = np.poly(roots) if roots.size else np.ones(1)
    expanded_ok = expanded.size == coeffs.size and bool(
        np.allclose(expanded, coeffs, rtol=0, atol=tol * max(1.0, float(np.max(np.abs(coeffs)))))
    )
    if not (residuals_ok and expanded_ok):
        LOG.warning("Root form of %s_%d(x, %s) does not hold", tag.value, n, beta)
    return residuals_ok and expanded_ok


def trig_product_check(n, tol=1e-9):
    """
    Numerical check of the four products

    * :math:`\\prod_{m=1}^{\\lfloor n/2 \\rfloor} \\cos^2\\frac{2m-1}{2n}\\pi = 1/2^{n-1}` (n even), :math:`n/2^{n-1}` (n odd);
    * :math:`\\prod_{m=1}^{\\lfloor (n-1)/2 \\rfloor} \\cos^2\\frac{m}{n}\\pi = n/2^{n-1}` (n even), :math:`1/2^{n-1}` (n odd);
    * :math:`\\prod_{m=1}^{\\lfloor n/2 \\rfloor} \\sin^2\\frac{2m-1}{2n}\\pi = 1/2^{n-1}`;
    * :math:`\\prod_{m=1}^{\\lfloor (n-1)/2 \\rfloor} \\sin^2\\frac{m}{n}\\pi = n/2^{n-1}`.
    """
    if n < 1:
        raise ValueError("Trigonometric products require n >= 1")
    base = 2.0 ** (1 - n)
    odd_angles = (2 * np.arange(1, n // 2 + 1) - 1) * np.pi / (2 * n)
    even_angles = np.arange(1, (n - 1) // 2 + 1) * np.pi / n
    even = n % 2 == 0

    products = [
        (np.prod(np.cos(odd_angles) ** 2), base if even else n * base),
        (np.prod(np.cos(even_angles) ** 2), n * base if even else base),
        (np.prod(np.sin(odd_angles) ** 2), base),
        (np.prod(np.sin(even_angles) ** 2), n * base),
    ]
    return all(abs(value - expected) <= tol * max(1.0, expected) for value, expected in products)


def gf_identities_check(phi, beta, N):
    """
    Generating-function identities of the generalized Lucas and Fibonacci numbers:

    * the Dickson pairs applied to :math:`1/(1 - \\varphi x)` give :math:`1/(1 - \\varphi x + \\beta x^2)`
      and :math:`(1 - \\beta x^2)/(1 - \\varphi x + \\beta x^2)`;
    * coefficients of the generating functions are the Dickson polynomials evaluated at :math:`\\varphi`;
    * :math:`P^{-\\varphi}` maps :math:`(2 - \\varphi x)/(1 - \\varphi x + \\beta x^2)` to
      :math:`(2 + \\varphi x)/(1 + \\varphi x + \\beta x^2)` and :math:`x/(1 - \\varphi x + \\beta x^2)`
      to :math:`x/(1 + \\varphi x + \\beta x^2)`;
    * when :math:`\\varphi^2 - 4\\beta` is a rational square and :math:`\\lambda = (\\varphi + \\sqrt{\\varphi^2 - 4\\beta})/2 \\neq 0`,
      :math:`P^{-\\varphi}(1 - \\lambda x)^{-1} = (1 + (\\beta/\\lambda) x)^{-1}`.

    Returns
    -------
    report : CheckReport
    """
    phi, beta = Fraction(phi), Fraction(beta)
    report = CheckReport("gf_identities")
    denominator = series_inv(Series([1, -phi, beta], order=N))
    geometric = series_inv(Series([1, -phi], order=N))

    report.add(
        "second_kind_action",
        pair_apply(dickson_pair(Family.E, beta, order=N), geometric) == denominator,
    )
    report.add(
        "first_kind_action",
        pair_apply(dickson_pair(Family.D, beta, order=N), geometric)
        == family_gf(Family.L, phi, beta, N) - 1,
    )

    lucas, fibonacci = family_gf(Family.L, phi, beta, N), family_gf(Family.F, phi, beta, N)
    report.add(
        "lucas_coefficients",
        all(lucas[n] == family_poly(Family.D, n, beta)(phi) for n in range(N + 1)),
    )
    report.add(
        "fibonacci_coefficients",
        all(fibonacci[n] == family_poly(Family.E, n - 1, beta)(phi) for n in range(1, N + 1))
        and fibonacci[0] == 0,
    )

    mirrored = series_inv(Series([1, phi, beta], order=N))
    report.add(
        "euler_lucas", euler_transform(-phi, lucas) == Series([2, phi], order=N) * mirrored
    )
    report.add(
        "euler_fibonacci",
        euler_transform(-phi, fibonacci) == Series([0, 1], order=N) * mirrored,
    )

    try:
        root = rational_sqrt(phi ** 2 - 4 * beta)
    except NonSquareConstant:
        LOG.debug("Geometric progression law skipped: discriminant is not a rational square")
    else:
        lam = (phi + root) / 2
        if lam != 0:
            report.add(
                "geometric_progression",
                euler_transform(-phi, series_inv(Series([1, -lam], order=N)))
                == series_inv(Series([1, beta / lam], order=N)),
            )
    return report

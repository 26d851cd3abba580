# -*- coding: utf-8 -*-
"""
Transformations of the first and second type
============================================

First type: :math:`a(x) = 1/(1 - \\varphi x + \\beta x^2)`, with companion series
:math:`b(x) = (1 + \\varphi x + \\sqrt{1 + 2\\varphi x + (\\varphi^2 - 4\\beta) x^2})/2`
and the decomposition :math:`2 b^n = c_n + s_n \\sqrt{\\cdots}`.

Second type: :math:`a(x) = 1/\\sqrt{1 - 2\\varphi x + \\beta x^2}`, with companion series
:math:`b(x) = \\varphi x + \\sqrt{1 + (\\varphi^2 - \\beta) x^2}`
and the decomposition :math:`b^n = t_n + u_n \\sqrt{\\cdots}`.
"""
import logging
from fractions import Fraction

import numpy as np

from .fps import (
    FPSError,
    InsufficientOrder,
    Poly,
    Series,
    log_deriv_factor,
    series_div_xpow,
    series_inv,
    series_mul_xpow,
    series_pow,
    series_sqrt,
    series_stretch,
)
from .polyfam import Family, family_poly, reverse_J
from .report import CheckReport
from .riordan import companion_b, make_pair, pair_to_matrix, pseudo_eigen_check, row_gf

LOG = logging.getLogger(__name__)

# Threshold below which a factor phi^2 - beta cos^2 is considered to vanish
DEGENERACY_THRESHOLD = 1e-12


class NonPolynomialResidue(FPSError):
    """Raised when a combination of series claimed to be a polynomial has a nonzero tail."""

    pass


def _polynomial_part(series, degree, name):
    tail = series.coeffs[degree + 1 :]
    if any(c != 0 for c in tail):
        raise NonPolynomialResidue(
            f"{name} has nonzero coefficients beyond x^{degree} (order {series.order} may be too small)"
        )
    return Poly(series.coeffs[: degree + 1])


def _require_order(ctx, n):
    if n < 0:
        raise ValueError("Decompositions are indexed by n >= 0")
    if 2 * n > ctx.order:
        raise InsufficientOrder(f"Index {n} requires order at least {2 * n}, got {ctx.order}")


class TypeOneContext:
    """
    Series attached to the transformation of the first type.

    Parameters
    ----------
    phi, beta : rational
    N : int
        Truncation order of every series.

    Attributes
    ----------
    sqrt_disc : Series
        :math:`\\sqrt{1 + 2\\varphi x + (\\varphi^2 - 4\\beta) x^2}`
    b, b_inv : Series
        Companion series and its inverse.
    log_factor : Series
        :math:`1 - x (\\log b)'`
    """

    def __init__(self, phi, beta, N):
        self.phi, self.beta, self.order = Fraction(phi), Fraction(beta), int(N)
        self.sqrt_disc = series_sqrt(
            Series([1, 2 * self.phi, self.phi ** 2 - 4 * self.beta], order=N)
        )
        self.b = (Series([1, self.phi], order=N) + self.sqrt_disc) / 2
        self.b_inv = series_inv(self.b)
        self.log_factor = 2 - log_deriv_factor(self.b)

    def __repr__(self):
        return f"< TypeOneContext phi={self.phi}, beta={self.beta}, order={self.order} >"

    @property
    def a(self):
        """:math:`1/(1 - \\varphi x + \\beta x^2)`"""
        return series_inv(Series([1, -self.phi, self.beta], order=self.order))

    def consistency(self):
        """
        Cross-checks: :math:`b` is the companion series of :math:`a`, :math:`b b^{-1} = 1`,
        the square root squares back and :math:`1 - x(\\log b)' = 1/\\sqrt{\\cdots}`.
        """
        N = self.order
        return CheckReport(
            "type1_context",
            [
                ("companion", companion_b(self.a) == self.b),
                ("inverse", self.b * self.b_inv == Series.one(N)),
                (
                    "discriminant",
                    self.sqrt_disc * self.sqrt_disc
                    == Series([1, 2 * self.phi, self.phi ** 2 - 4 * self.beta], order=N),
                ),
                ("log_factor", self.log_factor == series_inv(self.sqrt_disc)),
            ],
        )


class TypeTwoContext:
    """
    Series attached to the transformation of the second type.

    Parameters
    ----------
    phi, beta : rational
    N : int
        Truncation order of every series.

    Attributes
    ----------
    sqrt_disc : Series
        :math:`\\sqrt{1 + (\\varphi^2 - \\beta) x^2}`
    b, b_inv : Series
        Companion series and its inverse.
    log_factor : Series
        :math:`1 - x (\\log b)'`
    """

    def __init__(self, phi, beta, N):
        self.phi, self.beta, self.order = Fraction(phi), Fraction(beta), int(N)
        self.sqrt_disc = series_sqrt(Series([1, 0, self.phi ** 2 - self.beta], order=N))
        self.b = Series([0, self.phi], order=N) + self.sqrt_disc
        self.b_inv = series_inv(self.b)
        self.log_factor = 2 - log_deriv_factor(self.b)

    def __repr__(self):
        return f"< TypeTwoContext phi={self.phi}, beta={self.beta}, order={self.order} >"

    @property
    def a(self):
        """:math:`1/\\sqrt{1 - 2\\varphi x + \\beta x^2}`"""
        return series_inv(series_sqrt(Series([1, -2 * self.phi, self.beta], order=self.order)))

    def consistency(self):
        """
        Cross-checks: :math:`b` is the companion series of :math:`a`,
        :math:`1 - x(\\log b)' = 1/(b \\sqrt{\\cdots})` and
        :math:`(\\beta x^2 - 1) b^{-1} = \\varphi x - \\sqrt{\\cdots}`.
        """
        N = self.order
        return CheckReport(
            "type2_context",
            [
                ("companion", companion_b(self.a) == self.b),
                ("inverse", self.b * self.b_inv == Series.one(N)),
                ("log_factor", self.log_factor == series_inv(self.b * self.sqrt_disc)),
                (
                    "conjugate",
                    Series([-1, 0, self.beta], order=N) * self.b_inv
                    == Series([0, self.phi], order=N) - self.sqrt_disc,
                ),
            ],
        )


def type1_context(phi, beta, N):
    """Build the :class:`TypeOneContext` of parameters :math:`(\\varphi, \\beta)` at order ``N``."""
    return TypeOneContext(phi, beta, N)


def type2_context(phi, beta, N):
    """Build the :class:`TypeTwoContext` of parameters :math:`(\\varphi, \\beta)` at order ``N``."""
    return TypeTwoContext(phi, beta, N)


def type1_cs(ctx, n):
    """
    Polynomials :math:`c_n, s_n` such that :math:`2 b^n = c_n + s_n \\sqrt{1 + 2\\varphi x + (\\varphi^2 - 4\\beta)x^2}`,
    computed from series: :math:`c_n = b^n + \\beta^n x^{2n} b^{-n}`,
    :math:`s_n = (b^n - \\beta^n x^{2n} b^{-n}) / \\sqrt{\\cdots}`.

    Returns
    -------
    c, s : Poly
        Of degrees at most :math:`n` and :math:`n - 1`.

    Raises
    ------
    InsufficientOrder
        if :math:`2n` exceeds the order of the context.
    NonPolynomialResidue
        if a tail coefficient does not vanish.
    """
    _require_order(ctx, n)
    N = ctx.order
    power = series_pow(ctx.b, n)
    conjugate = series_mul_xpow(series_pow(ctx.b_inv, n) * ctx.beta ** n, 2 * n).truncate(N)
    c = _polynomial_part(power + conjugate, n, f"c_{n}")
    s = _polynomial_part((power - conjugate) * series_inv(ctx.sqrt_disc), n - 1, f"s_{n}")
    return c, s


def type1_closed_forms(phi, beta, n):
    """
    Closed forms :math:`c_n = J_n D_n(x + \\varphi, \\beta)` and
    :math:`s_n = J_{n-1} E_{n-1}(x + \\varphi, \\beta)`, with :math:`c_0 = 2, s_0 = 0`.
    """
    if n == 0:
        return Poly.constant(2), Poly()
    c = reverse_J(family_poly(Family.D, n, beta).shift(phi), n)
    s = reverse_J(family_poly(Family.E, n - 1, beta).shift(phi), n - 1)
    return c, s


def type1_cs_check(ctx, n):
    """Whether the series route and the closed forms of :math:`c_n, s_n` agree."""
    return type1_cs(ctx, n) == type1_closed_forms(ctx.phi, ctx.beta, n)


def type1_quadratic_check(ctx, n):
    """
    Whether :math:`b^{2n} - c_n b^n + \\beta^n x^{2n} = 0` through the order of the context,
    with :math:`c_n` taken from its closed form.
    """
    _require_order(ctx, n)
    N = ctx.order
    c, _ = type1_closed_forms(ctx.phi, ctx.beta, n)
    power = series_pow(ctx.b, n)
    relation = power * power - c.to_series(N) * power + Series.monomial(2 * n, N, ctx.beta ** n)
    return relation.is_zero()


def catalan_series(N):
    """Catalan generating function :math:`C(x) = (1 - \\sqrt{1 - 4x})/(2x)` through order ``N``."""
    root = series_sqrt(Series([1, -4], order=N + 1))
    return series_div_xpow(1 - root, 1) / 2


def _laurent_part(j, p, shift):
    """The polynomial :math:`x^{shift} (1/x)^j p(1/x)`; ``shift`` clears every negative power."""
    coeffs = dict()
    for i, c in enumerate(p.coeffs):
        if c != 0:
            coeffs[shift - j - i] = c
    if not coeffs:
        return Poly()
    return Poly(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


def catalan_power_check(k, N):
    """
    Whether :math:`C^k(x^2) = -(1/x)^k S_{k-2}(1/x) + (1/x)^{k-1} S_{k-1}(1/x) C(x^2)`
    through order ``N``, for any integer :math:`k`.

    Both sides are multiplied by the smallest power of :math:`x` that makes every term a
    polynomial or a power series (:math:`x^{2k-2}` for :math:`k \\geq 2`, 1 otherwise).

    Raises
    ------
    InsufficientOrder
        if :math:`N < 2|k| + 4`.
    """
    if N < 2 * abs(k) + 4:
        raise InsufficientOrder(f"Catalan power {k} requires order at least {2 * abs(k) + 4}")
    catalan = series_stretch(catalan_series(N // 2), 2).truncate(N)
    terms = [(k, family_poly(Family.S, k - 2)), (k - 1, family_poly(Family.S, k - 1))]
    shift = max([0] + [j + p.degree for j, p in terms if p])
    first = _laurent_part(k, terms[0][1], shift)
    second = _laurent_part(k - 1, terms[1][1], shift)

    lhs = series_mul_xpow(series_pow(catalan, k), shift).truncate(N)
    rhs = second.to_series(N) * catalan - first.to_series(N)
    return lhs == rhs


def type2_tu(ctx, n):
    """
    Polynomials :math:`t_n, u_n` such that :math:`b^n = t_n + u_n \\sqrt{1 + (\\varphi^2 - \\beta) x^2}`,
    computed from series: :math:`t_n = (b^n + (\\beta x^2 - 1)^n b^{-n})/2`,
    :math:`u_n = (b^n - (\\beta x^2 - 1)^n b^{-n})/(2\\sqrt{\\cdots})`.

    Returns
    -------
    t, u : Poly
        Of degrees at most :math:`n` and :math:`n - 1`.

    Raises
    ------
    InsufficientOrder
        if :math:`2n` exceeds the order of the context.
    NonPolynomialResidue
        if a tail coefficient does not vanish.
    """
    _require_order(ctx, n)
    N = ctx.order
    power = series_pow(ctx.b, n)
    conjugate = (Poly([-1, 0, ctx.beta]) ** n).to_series(N) * series_pow(ctx.b_inv, n)
    t = _polynomial_part((power + conjugate) / 2, n, f"t_{n}")
    u = _polynomial_part((power - conjugate) * series_inv(ctx.sqrt_disc * 2), n - 1, f"u_{n}")
    return t, u


def _type2_pairs(phi, beta, order):
    phi, beta = Fraction(phi), Fraction(beta)
    denominator = series_inv(Series([1, -2 * phi, beta], order=order))
    g = Series([0, 0, 1], order=order) * denominator
    return (
        make_pair(Series([1, -phi], order=order) * denominator, g),
        make_pair(Series([0, 1], order=order) * denominator, g),
    )


def type2_row_polys(phi, beta, n):
    """
    Row polynomials :math:`\\tilde{t}_n`, :math:`\\tilde{u}_n`: row :math:`n` of the stretched pairs
    :math:`((1 - \\varphi x)/(1 - 2\\varphi x + \\beta x^2), x^2/(1 - 2\\varphi x + \\beta x^2))` and
    :math:`(x/(1 - 2\\varphi x + \\beta x^2), x^2/(1 - 2\\varphi x + \\beta x^2))`.
    """
    even, odd = _type2_pairs(phi, beta, n)
    return row_gf(even, n), row_gf(odd, n)


def type2_closed_forms(phi, beta, n):
    """Closed forms :math:`t_n = J_n \\tilde{t}_n(x^2)` and :math:`u_n = J_{n-1} \\tilde{u}_n(x^2)`."""
    t_row, u_row = type2_row_polys(phi, beta, n)
    t = reverse_J(t_row.stretch(2), n)
    u = reverse_J(u_row.stretch(2), n - 1) if n > 0 else Poly()
    return t, u


def type2_tu_check(ctx, n):
    """Whether the series route and the closed forms of :math:`t_n, u_n` agree."""
    return type2_tu(ctx, n) == type2_closed_forms(ctx.phi, ctx.beta, n)


def type2_quadratic_check(ctx, n):
    """
    Whether :math:`b^{2n} - 2 t_n b^n + (\\beta x^2 - 1)^n = 0` through the order of the context,
    with :math:`t_n` taken from its closed form.
    """
    _require_order(ctx, n)
    N = ctx.order
    t, _ = type2_closed_forms(ctx.phi, ctx.beta, n)
    power = series_pow(ctx.b, n)
    relation = power * power - t.to_series(N) * power * 2 + (Poly([-1, 0, ctx.beta]) ** n).to_series(N)
    return relation.is_zero()


def type2_parity_check(ctx, n):
    """
    Whether :math:`t_n` only has powers of the parity of :math:`n` and :math:`u_n` only powers
    of the opposite parity.
    """
    t, u = type2_tu(ctx, n)
    return all(c == 0 for k, c in enumerate(t.coeffs) if (k - n) % 2) and all(
        c == 0 for k, c in enumerate(u.coeffs) if (k - n) % 2 == 0
    )


def _close(expected, exact, tol):
    length = max(len(expected), len(exact))
    expected = np.pad(np.asarray(expected, dtype=complex), (0, length - len(expected)))
    exact = np.pad(np.asarray(exact, dtype=complex), (0, length - len(exact)))
    scale = max(1.0, float(np.max(np.abs(exact), initial=0)), float(np.max(np.abs(expected), initial=0)))
    return bool(np.allclose(expected, exact, rtol=0, atol=tol * scale))


def _floats(poly):
    return np.array([float(c) for c in poly.coeffs], dtype=float)


def type2_root_check(phi, beta, n, tol=1e-9):
    """
    Numerical check of the product forms

    .. math::

        \\tilde{t}_n(x) = p_n \\prod_{m=1}^{\\lfloor n/2 \\rfloor} \\left(x + \\frac{\\varphi^2 - \\beta\\cos^2\\theta_m}{\\cos^2\\theta_m}\\right),
        \\quad \\theta_m = \\frac{2m-1}{2n}\\pi,

    with :math:`p_n = 1` (n even), :math:`n\\varphi` (n odd), and likewise for :math:`\\tilde{u}_n` with
    :math:`\\psi_m = m\\pi/n`, :math:`m \\leq \\lfloor (n-1)/2 \\rfloor` and :math:`r_n = n\\varphi` (n even), 1 (n odd).

    For :math:`\\varphi \\neq 0`, the complex forms of :math:`t_n` and :math:`u_n` with roots
    :math:`-i\\cos\\theta/\\sqrt{\\varphi^2 - \\beta\\cos^2\\theta}` are also checked. Vanishing factors
    :math:`\\varphi^2 - \\beta\\cos^2\\theta` are skipped and count as 1 in leading coefficients.

    Returns
    -------
    holds : bool
    """
    phi, beta = Fraction(phi), Fraction(beta)
    t_row, u_row = type2_row_polys(phi, beta, n)
    phi2, fbeta = float(phi) ** 2, float(beta)

    theta = (2 * np.arange(1, n // 2 + 1) - 1) * np.pi / (2 * n) if n else np.zeros(0)
    psi = np.arange(1, (n - 1) // 2 + 1) * np.pi / n if n else np.zeros(0)
    p_n = 1.0 if n % 2 == 0 else n * float(phi)
    r_n = n * float(phi) if n % 2 == 0 else 1.0

    def shifts(angles):
        cos2 = np.cos(angles) ** 2
        return (phi2 - fbeta * cos2) / cos2

    t_shifts, u_shifts = shifts(theta), shifts(psi)
    holds = _close(p_n * np.atleast_1d(np.poly(-t_shifts))[::-1], _floats(t_row), tol) and _close(
        r_n * np.atleast_1d(np.poly(-u_shifts))[::-1], _floats(u_row), tol
    )

    if phi != 0:
        t, u = type2_closed_forms(phi, beta, n)
        holds = holds and _close(
            _complex_form(phi2, fbeta, p_n, t_shifts, (2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n)),
            _floats(t),
            tol,
        )
        if n > 0:
            holds = holds and _close(
                _complex_form(phi2, fbeta, r_n, u_shifts, np.arange(1, n) * np.pi / n),
                _floats(u),
                tol,
            )
    if not holds:
        LOG.warning("Product forms of t/u fail for phi=%s, beta=%s, n=%d", phi, beta, n)
    return holds


def _complex_form(phi2, beta, lead, shifts, angles):
    """Coefficients, lowest degree first, of lead * prod(shifts) * prod(x + i cos/sqrt(phi^2 - beta cos^2))."""
    shifts = np.where(np.abs(shifts) < DEGENERACY_THRESHOLD, 1.0, shifts)
    radicands = phi2 - beta * np.cos(angles) ** 2
    keep = np.abs(radicands) >= DEGENERACY_THRESHOLD
    roots = -1j * np.cos(angles[keep]) / np.emath.sqrt(radicands[keep])
    return (lead * np.prod(shifts) * np.atleast_1d(np.poly(roots)))[::-1]


def type2_special_cases_check(n_max, N):
    """
    Special values of :math:`t_n, u_n`:

    * :math:`(\\varphi, \\beta) = (1, 1)`: :math:`t_n = ((x+1)^n + (x-1)^n)/2`, :math:`u_n = ((x+1)^n - (x-1)^n)/2`;
    * :math:`(1, 0)`: :math:`t_n = ((x+s)^n + (x-s)^n)/2`, :math:`u_n = ((x+s)^n - (x-s)^n)/(2s)`, :math:`s = \\sqrt{1+x^2}`;
    * :math:`(0, -1)`: :math:`t_{2n} = u_{2n+1} = (1+x^2)^n`, :math:`t_{2n+1} = u_{2n} = 0`;
    * :math:`(0, 0)`: :math:`t_{2n} = u_{2n+1} = 1`, :math:`t_{2n+1} = u_{2n} = 0`.

    Returns
    -------
    report : CheckReport

    Raises
    ------
    InsufficientOrder
        if :math:`N < 2 n_{max}`.
    """
    if N < 2 * n_max:
        raise InsufficientOrder(f"Special cases through n={n_max} require order {2 * n_max}")
    report = CheckReport("type2_special_cases")
    plus, minus = Poly([1, 1]), Poly([-1, 1])
    s = series_sqrt(Series([1, 0, 1], order=N))
    x = Series.x(N)

    contexts = {key: type2_context(*key, N) for key in [(1, 1), (1, 0), (0, -1), (0, 0)]}
    ones, zero = Poly([1, 0, 1]), Poly()
    for n in range(n_max + 1):
        values = {key: type2_tu(ctx, n) for key, ctx in contexts.items()}
        report.add(f"(1,1).{n}", values[(1, 1)] == ((plus ** n + minus ** n) / 2, (plus ** n - minus ** n) / 2))

        up, down = series_pow(x + s, n), series_pow(x - s, n)
        t, u = values[(1, 0)]
        report.add(
            f"(1,0).{n}",
            t.to_series(N) == (up + down) / 2 and u.to_series(N) == (up - down) * series_inv(s * 2),
        )

        half = ones ** (n // 2)
        even = n % 2 == 0
        report.add(f"(0,-1).{n}", values[(0, -1)] == ((half, zero) if even else (zero, half)))
        unit = Poly.constant(1)
        report.add(f"(0,0).{n}", values[(0, 0)] == ((unit, zero) if even else (zero, unit)))
    return report


def type1_pseudo_involution_check(ctx, n_rows):
    """
    Pseudo-involution relations of the first type:
    :math:`R P^{-2\\varphi} = M R M` for :math:`R = ((1 - \\beta x^2)/(1 - \\varphi x + \\beta x^2), x/(1 - \\varphi x + \\beta x^2))`
    and :math:`R = (a, xa)`; :math:`P^{2\\varphi} R = M R M` for :math:`R = (1 - x(\\log b)', x b^{-1})`
    and :math:`R = (b^{-1}, x b^{-1})`.
    """
    order = n_rows - 1
    if ctx.order < order:
        raise InsufficientOrder(f"Context of order {ctx.order} is too short for {n_rows} rows")
    a = ctx.a.truncate(order)
    xa = series_mul_xpow(a, 1).truncate(order)
    x_b_inv = series_mul_xpow(ctx.b_inv, 1).truncate(order)
    phi = ctx.phi
    return CheckReport(
        "type1_pseudo_involution",
        [
            (
                "log_a_right",
                pseudo_eigen_check(
                    make_pair(Series([1, 0, -ctx.beta], order=order) * a, xa), -2 * phi, n_rows, side="right"
                ),
            ),
            ("a_right", pseudo_eigen_check(make_pair(a, xa), -2 * phi, n_rows, side="right")),
            (
                "log_b_left",
                pseudo_eigen_check(make_pair(ctx.log_factor.truncate(order), x_b_inv), 2 * phi, n_rows),
            ),
            (
                "b_left",
                pseudo_eigen_check(make_pair(ctx.b_inv.truncate(order), x_b_inv), 2 * phi, n_rows),
            ),
        ],
    )


def type2_pseudo_involution_check(ctx, n_rows):
    """
    Pseudo-involution relations of the second type:
    :math:`P^{-2\\varphi} R = M R M` for :math:`R = ((1 - \\varphi x)/(1 - 2\\varphi x + \\beta x^2), x/\\sqrt{\\cdots})`
    and :math:`R = (1/\\sqrt{\\cdots}, x/\\sqrt{\\cdots})`; :math:`R P^{2\\varphi} = M R M` for
    :math:`R = (1 - x(\\log b)', x b^{-1})` and :math:`R = (b^{-1}, x b^{-1})`.
    """
    order = n_rows - 1
    if ctx.order < order:
        raise InsufficientOrder(f"Context of order {ctx.order} is too short for {n_rows} rows")
    phi, beta = ctx.phi, ctx.beta
    quadratic = Series([1, -2 * phi, beta], order=order)
    inv_root = series_inv(series_sqrt(quadratic))
    x_inv_root = series_mul_xpow(inv_root, 1).truncate(order)
    x_b_inv = series_mul_xpow(ctx.b_inv, 1).truncate(order)
    return CheckReport(
        "type2_pseudo_involution",
        [
            (
                "log_a_left",
                pseudo_eigen_check(
                    make_pair(Series([1, -phi], order=order) * series_inv(quadratic), x_inv_root),
                    -2 * phi,
                    n_rows,
                ),
            ),
            ("a_left", pseudo_eigen_check(make_pair(inv_root, x_inv_root), -2 * phi, n_rows)),
            (
                "log_b_right",
                pseudo_eigen_check(
                    make_pair(ctx.log_factor.truncate(order), x_b_inv), 2 * phi, n_rows, side="right"
                ),
            ),
            (
                "b_right",
                pseudo_eigen_check(
                    make_pair(ctx.b_inv.truncate(order), x_b_inv), 2 * phi, n_rows, side="right"
                ),
            ),
        ],
    )


def type2_column_split_check(phi, beta, n_rows):
    """
    Whether the even columns of :math:`((1 - \\varphi x)/(1 - 2\\varphi x + \\beta x^2), x/\\sqrt{\\cdots})` and the odd
    columns of :math:`(1/\\sqrt{\\cdots}, x/\\sqrt{\\cdots})` are the columns of the stretched pairs
    whose rows are :math:`\\tilde{t}_n` and :math:`\\tilde{u}_n`.
    """
    phi, beta = Fraction(phi), Fraction(beta)
    order = n_rows - 1
    quadratic = Series([1, -2 * phi, beta], order=order)
    inv_root = series_inv(series_sqrt(quadratic))
    g = series_mul_xpow(inv_root, 1).truncate(order)
    first = pair_to_matrix(make_pair(Series([1, -phi], order=order) * series_inv(quadratic), g), n_rows)
    second = pair_to_matrix(make_pair(inv_root, g), n_rows)
    even, odd = (pair_to_matrix(p, n_rows) for p in _type2_pairs(phi, beta, order))
    return all(first.column(2 * k) == even.column(k) for k in range((n_rows + 1) // 2)) and all(
        second.column(2 * k + 1) == odd.column(k) for k in range(n_rows // 2)
    )

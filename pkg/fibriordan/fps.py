# -*- coding: utf-8 -*-
"""
Truncated formal power series
=============================

Exact arithmetic on truncated formal power series with rational coefficients.

A :class:`Series` holds the coefficients of :math:`x^0, ..., x^N` and its truncation order
:math:`N`: nothing is known about coefficients beyond :math:`x^N`. Every operation documents
the order through which its result is exact.
"""
import json
import logging
import re
from fractions import Fraction
from math import isqrt, lcm
from numbers import Rational

import numpy as np

LOG = logging.getLogger(__name__)

RATIONAL_REGEX = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class FPSError(ValueError):
    """Base class for errors raised by series and polynomial operations."""

    pass


class ZeroConstantTerm(FPSError):
    """Raised when an operation requires a nonzero constant term."""

    pass


class NonzeroInnerConstant(FPSError):
    """Raised when a series is composed with an inner series with nonzero constant term."""

    pass


class BadValuation(FPSError):
    """Raised when a series does not have the valuation an operation requires."""

    pass


class NonSquareConstant(FPSError):
    """Raised when the constant term of a series is not the square of a rational."""

    pass


class InsufficientOrder(FPSError):
    """Raised when the truncation order of a series is too small for the requested result."""

    pass


def parse_rational(text):
    """
    Parse a rational number from a string of the form ``"p"`` or ``"p/q"``.

    Parameters
    ----------
    text : str
        Optional sign, decimal integer, optionally followed by ``/`` and a positive integer.

    Returns
    -------
    r : Fraction

    Raises
    ------
    ValueError
        if the string does not match the grammar or the denominator is zero.
    """
    if not isinstance(text, str):
        raise ValueError(f"Rationals are parsed from strings, not {type(text).__name__}")
    match = RATIONAL_REGEX.match(text.strip())
    if match is None:
        raise ValueError(f"Malformed rational: {text!r}")
    num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"Zero denominator in rational: {text!r}")
    return Fraction(int(num), den)


def _to_fraction(value):
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def _is_scalar(value):
    return isinstance(value, (Rational, str))


def rational_sqrt(r):
    """
    Exact square root of a rational number.

    Raises
    ------
    NonSquareConstant
        if ``r`` is not the square of a rational.
    """
    r = Fraction(r)
    if r < 0:
        raise NonSquareConstant(f"{r} is negative")
    num, den = isqrt(r.numerator), isqrt(r.denominator)
    if num * num != r.numerator or den * den != r.denominator:
        raise NonSquareConstant(f"{r} is not the square of a rational")
    return Fraction(num, den)


class Series:
    """
    Truncated formal power series with exact rational coefficients.

    Parameters
    ----------
    coeffs : iterable of rationals
        Coefficients of :math:`x^0, x^1, ...`. Missing coefficients up to ``order`` are zero;
        coefficients beyond ``order`` are discarded. Strings like ``"3/4"`` are accepted.
    order : int or None, optional
        Truncation order. If None (default), the order is ``len(coeffs) - 1``.
        An order of -1 is the empty series, about which nothing is known.
    """

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs, order=None):
        coeffs = tuple(_to_fraction(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        order = int(order)
        if order < -1:
            raise ValueError(f"Invalid truncation order {order}")
        if len(coeffs) < order + 1:
            coeffs = coeffs + (Fraction(0),) * (order + 1 - len(coeffs))
        self._coeffs = coeffs[: order + 1]
        self._order = order

    @classmethod
    def constant(cls, value, order):
        """Constant series ``value`` known through ``order``."""
        return cls([value], order=order)

    @classmethod
    def zero(cls, order):
        return cls([], order=order)

    @classmethod
    def one(cls, order):
        return cls([1], order=order)

    @classmethod
    def x(cls, order):
        """The series :math:`x`, known through ``order``."""
        return cls([0, 1], order=order)

    @classmethod
    def monomial(cls, k, order, coeff=1):
        """The series :math:`c x^k` known through ``order``."""
        return cls([0] * k + [coeff], order=order)

    @property
    def coeffs(self):
        """Tuple of coefficients :math:`[x^0], ..., [x^N]`."""
        return self._coeffs

    @property
    def order(self):
        """Truncation order :math:`N`."""
        return self._order

    @property
    def valuation(self):
        """Index of the first nonzero coefficient, or None if all known coefficients vanish."""
        for index, c in enumerate(self._coeffs):
            if c != 0:
                return index
        return None

    def __getitem__(self, n):
        if n < 0:
            return Fraction(0)
        if n > self._order:
            raise InsufficientOrder(
                f"Coefficient of x^{n} requested from a series known through x^{self._order}"
            )
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        return f"< Series of order {self._order}: [{', '.join(map(str, self._coeffs))}] >"

    def __str__(self):
        body = _format_terms(self._coeffs)
        return f"{body} + O(x^{self._order + 1})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def truncate(self, order):
        """Forget every coefficient beyond ``order``."""
        if order > self._order:
            raise InsufficientOrder(
                f"Cannot truncate a series of order {self._order} to order {order}"
            )
        return Series(self._coeffs, order=order)

    def agrees(self, other, order=None):
        """
        Whether two series have the same coefficients through ``order``, by default
        through the smallest of both orders.
        """
        if order is None:
            order = min(self.order, other.order)
        if order > min(self.order, other.order):
            raise InsufficientOrder(f"Cannot compare series through order {order}")
        return self._coeffs[: order + 1] == other._coeffs[: order + 1]

    def is_zero(self):
        """Whether all known coefficients vanish."""
        return all(c == 0 for c in self._coeffs)

    def to_poly(self):
        """Polynomial made of the known coefficients."""
        return Poly(self._coeffs)

    def to_json(self):
        return series_to_json(self)

    # Arithmetic dunders delegate to the module functions below
    def __neg__(self):
        return series_linear(self, self, -1, 0)

    def __add__(self, other):
        if _is_scalar(other):
            other = Series.constant(_to_fraction(other), self._order)
        if isinstance(other, Poly):
            other = other.to_series(self._order)
        if not isinstance(other, Series):
            return NotImplemented
        return series_linear(self, other, 1, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = Series.constant(_to_fraction(other), self._order)
        if isinstance(other, Poly):
            other = other.to_series(self._order)
        if not isinstance(other, Series):
            return NotImplemented
        return series_linear(self, other, 1, -1)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if _is_scalar(other):
            return series_linear(self, self, _to_fraction(other), 0)
        if isinstance(other, Poly):
            other = other.to_series(self._order)
        if not isinstance(other, Series):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return series_linear(self, self, 1 / _to_fraction(other), 0)
        if isinstance(other, Poly):
            other = other.to_series(self._order)
        if not isinstance(other, Series):
            return NotImplemented
        return series_mul(self, series_inv(other))

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return series_inv(self) * _to_fraction(other)
        return NotImplemented

    def __pow__(self, k):
        return series_pow(self, k)

    def __call__(self, g):
        """Composition ``self(g)``."""
        return series_compose(self, g)


class Poly:
    """
    Exact polynomial with rational coefficients.

    Trailing zero coefficients are dropped at construction; the zero polynomial has no
    coefficients and degree :math:`-\\infty`.

    Parameters
    ----------
    coeffs : iterable of rationals
        Coefficients of :math:`x^0, x^1, ...`.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=tuple()):
        coeffs = [_to_fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def monomial(cls, k, coeff=1):
        return cls([0] * k + [coeff])

    @property
    def coeffs(self):
        """Tuple of coefficients, without trailing zeros."""
        return self._coeffs

    @property
    def degree(self):
        """Degree of the polynomial, or ``-inf`` for the zero polynomial."""
        if not self._coeffs:
            return float("-inf")
        return len(self._coeffs) - 1

    def __getitem__(self, k):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __iter__(self):
        return iter(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"< Poly: [{', '.join(map(str, self._coeffs))}] >"

    def __str__(self):
        return _format_terms(self._coeffs) or "0"

    def __eq__(self, other):
        if _is_scalar(other):
            other = Poly.constant(_to_fraction(other))
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def padded(self, length):
        """Coefficient tuple of exactly ``length`` entries."""
        if len(self._coeffs) > length:
            raise ValueError(f"Polynomial of degree {self.degree} has more than {length} coefficients")
        return self._coeffs + (Fraction(0),) * (length - len(self._coeffs))

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __add__(self, other):
        if _is_scalar(other):
            other = Poly.constant(_to_fraction(other))
        if isinstance(other, Series):
            return other + self
        if not isinstance(other, Poly):
            return NotImplemented
        length = max(len(self._coeffs), len(other._coeffs))
        return Poly(a + b for a, b in zip(self.padded(length), other.padded(length)))

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = Poly.constant(_to_fraction(other))
        if isinstance(other, Series):
            return -other + self
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            other = _to_fraction(other)
            return Poly(c * other for c in self._coeffs)
        if isinstance(other, Series):
            return other * self
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Poly()
        return Poly(_convolve(self._coeffs, other._coeffs, len(self._coeffs) + len(other._coeffs) - 2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1 / _to_fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("Polynomials can only be raised to nonnegative powers")
        result = Poly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, arg):
        """
        Evaluate the polynomial by Horner's rule. ``arg`` can be a rational, a ``Poly``
        (composition) or a ``Series`` (composition with any constant term).
        """
        if isinstance(arg, Series):
            return series_compose(self, arg)
        if isinstance(arg, Poly):
            result = Poly()
        else:
            arg = _to_fraction(arg)
            result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * arg + c
        return result

    def shift(self, phi):
        """The polynomial :math:`c(x + \\varphi)`."""
        return self(Poly([phi, 1]))

    def mul_xpow(self, k):
        """The polynomial :math:`x^k c(x)`."""
        if not self._coeffs:
            return Poly()
        return Poly((0,) * k + self._coeffs)

    def stretch(self, k):
        """The polynomial :math:`c(x^k)`."""
        coeffs = [Fraction(0)] * (k * max(len(self._coeffs) - 1, 0) + 1)
        for index, c in enumerate(self._coeffs):
            coeffs[k * index] = c
        return Poly(coeffs)

    def reverse(self, n):
        """The polynomial :math:`x^n c(1/x)`. See :func:`fibriordan.polyfam.reverse_J`."""
        return Poly(tuple(reversed(self.padded(n + 1))))

    def to_series(self, order):
        """This polynomial as a series known through ``order``."""
        return Series(self._coeffs[: order + 1], order=order)

    def to_numpy(self):
        """Float coefficients, lowest degree first."""
        return np.array([float(c) for c in self._coeffs] or [0.0], dtype=float)

    def to_json(self):
        return poly_to_json(self)


def _format_terms(coeffs):
    terms = list()
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            monomial = ""
        elif k == 1:
            monomial = "x"
        else:
            monomial = f"x^{k}"
        if monomial and c == 1:
            term = monomial
        elif monomial and c == -1:
            term = f"-{monomial}"
        elif monomial:
            term = f"{c}*{monomial}"
        else:
            term = str(c)
        terms.append(term)
    return " + ".join(terms).replace("+ -", "- ")


def _convolve(a, b, order):
    """Cauchy product of coefficient tuples, through ``order``, on integer numerators."""
    da = lcm(*(c.denominator for c in a)) if a else 1
    db = lcm(*(c.denominator for c in b)) if b else 1
    ia = [c.numerator * (da // c.denominator) for c in a[: order + 1]]
    ib = [c.numerator * (db // c.denominator) for c in b[: order + 1]]
    out = [0] * (order + 1)
    for i, ai in enumerate(ia):
        if ai == 0:
            continue
        for j, bj in enumerate(ib[: order + 1 - i]):
            out[i + j] += ai * bj
    den = da * db
    return [Fraction(s, den) for s in out]


def series_linear(a, b, alpha, beta):
    """
    Linear combination :math:`\\alpha a + \\beta b`.

    Returns
    -------
    s : Series
        Exact through ``min(a.order, b.order)``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    order = min(a.order, b.order)
    return Series(
        (alpha * p + beta * q for p, q in zip(a.coeffs[: order + 1], b.coeffs[: order + 1])),
        order=order,
    )


def series_mul(a, b):
    """
    Cauchy product of two series, exact through ``min(a.order, b.order)``.
    """
    order = min(a.order, b.order)
    if order < 0:
        return Series.zero(order)
    return Series(_convolve(a.coeffs, b.coeffs, order), order=order)


def series_inv(a):
    """
    Multiplicative inverse of a series, exact through ``a.order``.

    Raises
    ------
    ZeroConstantTerm
        if the constant term of ``a`` vanishes.
    """
    if a.order < 0 or a.coeffs[0] == 0:
        raise ZeroConstantTerm("Only series with a nonzero constant term can be inverted")
    coeffs = a.coeffs
    inv0 = 1 / coeffs[0]
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = sum((coeffs[k] * out[n - k] for k in range(1, n + 1) if coeffs[k]), Fraction(0))
        out.append(-inv0 * acc)
    return Series(out, order=a.order)


def series_pow(a, k):
    """
    Integer power of a series; negative powers require a nonzero constant term.
    Exact through ``a.order``.
    """
    k = int(k)
    if k < 0:
        return series_pow(series_inv(a), -k)
    result = Series.one(a.order)
    base = a
    # Binary exponentiation
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_compose(a, g):
    """
    Composition :math:`a(g(x))`.

    Parameters
    ----------
    a : Series or Poly
        Outer series. If ``a`` is a polynomial, ``g`` may have any constant term.
    g : Series
        Inner series.

    Returns
    -------
    s : Series
        If ``g`` has valuation :math:`v \\geq 1`, the result is exact through
        :math:`\\min(N_g, (N_a + 1) v - 1)`, which is at least :math:`\\min(N_a, N_g)`.
        If ``a`` is a polynomial, the result is exact through :math:`N_g`.

    Raises
    ------
    NonzeroInnerConstant
        if ``a`` is a series and the constant term of ``g`` does not vanish.
    """
    if isinstance(a, Poly):
        order = g.order
        coeffs = a.coeffs
        top = len(coeffs) - 1
    else:
        if g.order >= 0 and g.coeffs[0] != 0:
            raise NonzeroInnerConstant(
                "Series can only be composed with series without constant term"
            )
        valuation = g.valuation
        if valuation is None:
            order = g.order
            top = 0
        else:
            order = min(g.order, (a.order + 1) * valuation - 1)
            top = min(a.order, order // valuation)
        coeffs = a.coeffs

    if top < 0:
        return Series.zero(order)

    inner = g.truncate(order)
    result = Series.constant(coeffs[top], order)
    for k in range(top - 1, -1, -1):
        result = series_mul(result, inner) + coeffs[k]
    return result


def series_reversion(h):
    """
    Compositional inverse :math:`\\bar{h}` such that :math:`h(\\bar{h}(x)) = x`.

    Coefficients are extracted one by one from the powers of :math:`x / h(x)`:
    :math:`[x^n] \\bar{h} = \\frac{1}{n} [x^{n-1}] (x / h)^n`.

    Returns
    -------
    hbar : Series
        Exact through ``h.order``.

    Raises
    ------
    BadValuation
        if :math:`h_0 \\neq 0` or :math:`h_1 = 0`.
    """
    if h.order < 1 or h.coeffs[0] != 0 or h.coeffs[1] == 0:
        raise BadValuation("Reversion requires h(0) = 0 and h'(0) != 0")
    LOG.debug("Reverting series of order %d", h.order)
    ratio = series_inv(series_div_xpow(h, 1))
    coeffs = [Fraction(0)]
    power = ratio
    for n in range(1, h.order + 1):
        coeffs.append(power.coeffs[n - 1] / n)
        if n < h.order:
            power = series_mul(power, ratio)
    return Series(coeffs, order=h.order)


def series_sqrt(a):
    """
    Square root of a series, with positive constant term.

    Returns
    -------
    s : Series
        :math:`s^2 = a`, exact through ``a.order``.

    Raises
    ------
    ZeroConstantTerm
        if the constant term of ``a`` vanishes.
    NonSquareConstant
        if the constant term of ``a`` is not the square of a rational.
    """
    if a.order < 0 or a.coeffs[0] == 0:
        raise ZeroConstantTerm("Square roots require a nonzero constant term")
    s0 = rational_sqrt(a.coeffs[0])
    out = [s0]
    for n in range(1, a.order + 1):
        acc = sum((out[k] * out[n - k] for k in range(1, n)), Fraction(0))
        out.append((a.coeffs[n] - acc) / (2 * s0))
    return Series(out, order=a.order)


def series_deriv(a):
    """Formal derivative, exact through ``a.order - 1``."""
    return Series((k * c for k, c in enumerate(a.coeffs) if k > 0), order=a.order - 1)


def log_deriv_factor(a):
    """
    The series :math:`1 + x a'(x) / a(x)`, exact through ``a.order``.

    Raises
    ------
    ZeroConstantTerm
        if the constant term of ``a`` vanishes.
    """
    ratio = series_mul(series_deriv(a), series_inv(a.truncate(max(a.order - 1, 0))))
    return series_mul_xpow(ratio, 1) + 1


def even_odd_split(a):
    """
    Split :math:`a(x) = a_1(x^2) + x a_2(x^2)`.

    Returns
    -------
    a1, a2 : Series
        Even and odd parts, of orders :math:`\\lfloor N/2 \\rfloor` and
        :math:`\\lfloor (N-1)/2 \\rfloor` respectively.
    """
    n = a.order
    return (
        Series(a.coeffs[0::2], order=n // 2),
        Series(a.coeffs[1::2], order=(n - 1) // 2),
    )


def series_stretch(a, k):
    """The series :math:`a(x^k)`, exact through :math:`(N + 1) k - 1`."""
    order = (a.order + 1) * k - 1
    coeffs = [Fraction(0)] * (order + 1)
    for index, c in enumerate(a.coeffs):
        coeffs[k * index] = c
    return Series(coeffs, order=order)


def series_mul_xpow(a, k):
    """The series :math:`x^k a(x)`, exact through ``a.order + k``."""
    return Series((0,) * k + a.coeffs, order=a.order + k)


def series_div_xpow(a, k):
    """
    The series :math:`a(x) / x^k`, exact through ``a.order - k``.

    Raises
    ------
    BadValuation
        if one of the first ``k`` coefficients of ``a`` is nonzero.
    """
    if any(c != 0 for c in a.coeffs[:k]):
        raise BadValuation(f"Series is not divisible by x^{k}")
    return Series(a.coeffs[k:], order=a.order - k)


def series_to_json(a):
    """JSON document ``{"order": N, "coeffs": ["p/q", ...]}``."""
    return json.dumps({"order": a.order, "coeffs": [str(c) for c in a.coeffs]})


def series_from_json(document):
    """
    Inverse of :func:`series_to_json`. ``document`` is a JSON string or an already-decoded mapping.

    Raises
    ------
    ValueError
        if the document is malformed.
    """
    if isinstance(document, str):
        document = json.loads(document)
    try:
        order = document["order"]
        coeffs = [parse_rational(c) for c in document["coeffs"]]
    except (KeyError, TypeError) as e:
        raise ValueError(f"Malformed series document: {e}")
    if isinstance(order, bool) or not isinstance(order, int) or len(coeffs) != order + 1:
        raise ValueError("Series document order does not match its coefficients")
    return Series(coeffs, order=order)


def poly_to_json(p):
    """JSON list of coefficient strings; the zero polynomial is ``["0"]``."""
    return json.dumps([str(c) for c in p.coeffs] or ["0"])


def poly_from_json(document):
    """Inverse of :func:`poly_to_json`."""
    if isinstance(document, str):
        document = json.loads(document)
    if not isinstance(document, list):
        raise ValueError("Polynomial documents are lists of coefficients")
    return Poly(parse_rational(c) for c in document)

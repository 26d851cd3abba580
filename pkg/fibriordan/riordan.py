# -*- coding: utf-8 -*-
"""
Riordan arrays
==============

Riordan pairs :math:`(f, g)`, their realization as exact lower-triangular matrices,
the group law, powers of the Pascal matrix and the identities relating a series
:math:`a(x)` to its companion series :math:`b(x)`.
"""
import csv
import io
import json
import logging
from fractions import Fraction

import numpy as np

from .fps import (
    FPSError,
    InsufficientOrder,
    BadValuation,
    Poly,
    Series,
    log_deriv_factor,
    parse_rational,
    series_compose,
    series_div_xpow,
    series_inv,
    series_mul,
    series_mul_xpow,
    series_reversion,
)
from .report import CheckReport

LOG = logging.getLogger(__name__)

DEFAULT_ORDER = 16


class NotProper(FPSError):
    """Raised when a Riordan pair must be proper (f(0) != 0, g'(0) != 0) but is not."""

    pass


class BadConstantTerm(FPSError):
    """Raised when a series is required to have constant term 1."""

    pass


class ExactMatrix:
    """
    Finite matrix of exact rationals.

    Entries are stored in a numpy array of ``object`` dtype holding ``Fraction`` instances.
    Instances are immutable.

    Parameters
    ----------
    entries : iterable of iterables
        Rows of the matrix. Strings like ``"-3/4"`` are accepted.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        rows = [[e if isinstance(e, Fraction) else _fraction(e) for e in row] for row in entries]
        if not rows or not rows[0] or len({len(row) for row in rows}) != 1:
            raise ValueError("Matrices must be non-empty and rectangular")
        array = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            array[i, :] = row
        array.flags.writeable = False
        self._entries = array

    @classmethod
    def _from_array(cls, array):
        new = object.__new__(cls)
        array = np.array(array, dtype=object)
        array.flags.writeable = False
        new._entries = array
        return new

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        return cls([[values[i] if i == j else 0 for j in range(len(values))] for i in range(len(values))])

    @property
    def entries(self):
        """Read-only numpy array of Fractions."""
        return self._entries

    @property
    def shape(self):
        return self._entries.shape

    @property
    def n_rows(self):
        return self._entries.shape[0]

    @property
    def n_cols(self):
        return self._entries.shape[1]

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._entries == other._entries))

    def __hash__(self):
        return hash(tuple(map(tuple, self._entries)))

    def __repr__(self):
        return f"< {type(self).__name__} {self.n_rows}x{self.n_cols} >"

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise ValueError(f"Incompatible shapes {self.shape} and {other.shape}")
        return ExactMatrix._from_array(np.dot(self._entries, other._entries))

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return ExactMatrix._from_array(self._entries + other._entries)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return ExactMatrix._from_array(self._entries - other._entries)

    def __mul__(self, scalar):
        return ExactMatrix._from_array(self._entries * Fraction(scalar))

    __rmul__ = __mul__

    def transpose(self):
        return ExactMatrix._from_array(self._entries.T)

    @property
    def T(self):
        return self.transpose()

    def block(self, n_rows, n_cols=None):
        """Leading ``n_rows`` x ``n_cols`` block."""
        n_cols = n_rows if n_cols is None else n_cols
        if n_rows > self.n_rows or n_cols > self.n_cols:
            raise InsufficientOrder(f"Cannot extract a {n_rows}x{n_cols} block from {self.shape}")
        return ExactMatrix._from_array(self._entries[:n_rows, :n_cols])

    def sign_conjugate(self):
        """The matrix :math:`M A M`, i.e. entries multiplied by :math:`(-1)^{n+k}`."""
        rows, cols = self.shape
        signs = np.array([[(-1) ** (i + j) for j in range(cols)] for i in range(rows)], dtype=object)
        return ExactMatrix._from_array(self._entries * signs)

    def scale_columns(self, factors):
        """Right multiplication by the diagonal matrix ``factors``."""
        factors = np.array([Fraction(f) for f in factors], dtype=object)
        return ExactMatrix._from_array(self._entries * factors[None, :])

    def is_lower_triangular(self):
        rows, cols = self.shape
        return all(self._entries[i, j] == 0 for i in range(rows) for j in range(i + 1, cols))

    def inverse_lower(self):
        """
        Inverse of a square lower-triangular matrix with nonzero diagonal, by forward substitution.

        Raises
        ------
        ValueError
            if the matrix is not square, not lower-triangular, or has a vanishing diagonal entry.
        """
        n = self.n_rows
        if self.n_cols != n or not self.is_lower_triangular():
            raise ValueError("Only square lower-triangular matrices can be inverted")
        if any(self._entries[i, i] == 0 for i in range(n)):
            raise ValueError("Lower-triangular matrix has a vanishing diagonal entry")
        a = self._entries
        inv = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = 1 / a[j, j]
            for i in range(j + 1, n):
                acc = sum((a[i, k] * inv[k][j] for k in range(j, i)), Fraction(0))
                inv[i][j] = -acc / a[i, i]
        return ExactMatrix(inv)

    def row_poly(self, n):
        """Row ``n`` as a polynomial :math:`\\sum_k a_{n,k} x^k`."""
        return Poly(self._entries[n, :])

    def column(self, k):
        return tuple(self._entries[:, k])

    def to_json(self):
        """JSON document ``{"rows": N, "cols": K, "entries": [[...], ...]}``."""
        return json.dumps(
            {
                "rows": self.n_rows,
                "cols": self.n_cols,
                "entries": [[str(e) for e in row] for row in self._entries],
            }
        )

    @classmethod
    def from_json(cls, document):
        if isinstance(document, str):
            document = json.loads(document)
        try:
            entries = [[parse_rational(e) for e in row] for row in document["entries"]]
            n_rows = document["rows"]
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed matrix document: {e}")
        if len(entries) != n_rows:
            raise ValueError("Matrix document row count does not match its entries")
        return cls(entries)

    def to_csv(self):
        """CSV text, one row per line, cells formatted as ``p/q``."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in self._entries:
            writer.writerow([str(e) for e in row])
        return buffer.getvalue()


class LowerMatrix(ExactMatrix):
    """
    Square lower-triangular exact matrix, as realized from a Riordan pair.

    Raises
    ------
    ValueError
        if the entries are not square and lower-triangular.
    """

    __slots__ = tuple()

    def __init__(self, entries):
        super().__init__(entries)
        if self.n_rows != self.n_cols or not self.is_lower_triangular():
            raise ValueError("LowerMatrix entries must be square and lower-triangular")


def _fraction(value):
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


class RiordanPair:
    """
    Riordan pair :math:`(f, g)` with :math:`g(0) = 0`. Column :math:`k` of the
    associated matrix has generating function :math:`f g^k`.

    Use :func:`make_pair` to build instances.
    """

    __slots__ = ("f", "g")

    def __init__(self, f, g):
        if g.order >= 0 and g.coeffs[0] != 0:
            raise BadValuation("The second series of a Riordan pair must have g(0) = 0")
        self.f = f
        self.g = g

    @property
    def order(self):
        """Order through which both series are known."""
        return min(self.f.order, self.g.order)

    @property
    def proper(self):
        """Whether :math:`f(0) \\neq 0` and :math:`g'(0) \\neq 0`."""
        return self.order >= 1 and self.f.coeffs[0] != 0 and self.g.coeffs[1] != 0

    @property
    def stretch(self):
        """Valuation of :math:`g`, or None if :math:`g` vanishes through its order."""
        return self.g.valuation

    def __eq__(self, other):
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def __repr__(self):
        return f"< RiordanPair of order {self.order}: ({self.f}, {self.g}) >"

    def __matmul__(self, other):
        return pair_mul(self, other)

    def __call__(self, a):
        return pair_apply(self, a)


def make_pair(f, g):
    """
    Build a Riordan pair.

    Parameters
    ----------
    f, g : Series
        Column generating functions are :math:`f g^k`.

    Raises
    ------
    BadValuation
        if :math:`g(0) \\neq 0`.
    """
    return RiordanPair(f, g)


def identity_pair(order=DEFAULT_ORDER):
    """The pair :math:`(1, x)`."""
    return make_pair(Series.one(order), Series.x(order))


def sign_involution(order=DEFAULT_ORDER):
    """The Riordan involution :math:`M = (1, -x)`."""
    return make_pair(Series.one(order), Series([0, -1], order=order))


def _negate_argument(a):
    return Series(((-1) ** n * c for n, c in enumerate(a.coeffs)), order=a.order)


def conjugate_by_M(p):
    """The pair :math:`M p M = (f(-x), -g(-x))`."""
    return make_pair(_negate_argument(p.f), -_negate_argument(p.g))


def pair_to_matrix(p, n_rows):
    """
    Leading ``n_rows`` x ``n_rows`` block of the matrix of a Riordan pair.

    Parameters
    ----------
    p : RiordanPair
    n_rows : int
        Number of rows (and columns).

    Returns
    -------
    m : LowerMatrix
        Entry :math:`(n, k)` is :math:`[x^n] f g^k`.

    Raises
    ------
    InsufficientOrder
        if ``p`` is not known through order ``n_rows - 1``.
    """
    if n_rows < 1:
        raise ValueError("Matrices have at least one row")
    if p.order < n_rows - 1:
        raise InsufficientOrder(
            f"A pair of order {p.order} cannot be realized with {n_rows} rows"
        )
    g = p.g.truncate(n_rows - 1)
    column = p.f.truncate(n_rows - 1)
    columns = list()
    for _ in range(n_rows):
        columns.append(column.coeffs)
        column = series_mul(column, g)
    return LowerMatrix([[columns[k][n] for k in range(n_rows)] for n in range(n_rows)])


def pair_mul(p, q):
    """
    Product of Riordan pairs, :math:`(f_p \\cdot (f_q \\circ g_p), g_q \\circ g_p)`.
    The matrix of the product is the product of the matrices.
    """
    return make_pair(
        series_mul(p.f, series_compose(q.f, p.g)), series_compose(q.g, p.g)
    )


def pair_inverse(p):
    """
    Inverse of a proper Riordan pair, :math:`(1 / (f \\circ \\bar{g}), \\bar{g})`
    where :math:`\\bar{g}` is the compositional inverse of :math:`g`.

    Raises
    ------
    NotProper
        if ``p`` is not proper.
    """
    if not p.proper:
        raise NotProper("Only proper Riordan pairs are invertible")
    gbar = series_reversion(p.g)
    return make_pair(series_inv(series_compose(p.f, gbar)), gbar)


def pair_apply(p, a):
    """Action of a Riordan pair on a series (or polynomial): :math:`f(x) a(g(x))`."""
    return series_mul(p.f, series_compose(a, p.g))


def row_gf(p, n):
    """
    Row ``n`` of the matrix of ``p``, as the polynomial :math:`\\sum_k [x^n] f g^k \\, x^k`.

    Raises
    ------
    InsufficientOrder
        if ``p`` is not known through order ``n``.
    """
    return pair_to_matrix(p, n + 1).row_poly(n)


def pascal_power(phi, order=DEFAULT_ORDER):
    """
    Power of the Pascal matrix, :math:`P^\\varphi = (1/(1 - \\varphi x), x/(1 - \\varphi x))`.
    """
    f = series_inv(Series([1, -Fraction(phi)], order=order))
    return make_pair(f, series_mul_xpow(f, 1).truncate(order))


def euler_transform(phi, a):
    """Generalized Euler transformation :math:`\\frac{1}{1 - \\varphi x} a(\\frac{x}{1 - \\varphi x})`."""
    return pair_apply(pascal_power(phi, a.order), a)


def shift_polynomial(c, phi):
    """Shift operator: :math:`c(x + \\varphi)`."""
    return c.shift(phi)


def pseudo_eigen_check(p, phi, n_rows, side="left", transpose=False):
    """
    Check the pseudo-eigen relation :math:`P^\\varphi A = M A M` (``side="left"``)
    or :math:`A P^\\varphi = M A M` (``side="right"``).

    Parameters
    ----------
    p : RiordanPair or ExactMatrix
        Pair, realized with ``n_rows`` rows, or a matrix, of which the leading
        ``n_rows`` rows are used.
    phi : rational
        Power of the Pascal matrix.
    n_rows : int
    side : {"left", "right"}, optional
    transpose : bool, optional
        If True, :math:`(P^\\varphi)^T` is used instead of :math:`P^\\varphi`. Truncated products
        are exact only if the matrix is column-finite within the block, e.g. for bases of polynomials.

    Returns
    -------
    holds : bool

    Raises
    ------
    InsufficientOrder
        if the pair cannot be realized with ``n_rows`` rows.
    """
    if side not in {"left", "right"}:
        raise ValueError(f"Unknown side {side!r}")
    if isinstance(p, ExactMatrix):
        matrix = p.block(n_rows, p.n_cols)
    else:
        matrix = pair_to_matrix(p, n_rows)
    size = matrix.n_rows if side == "left" else matrix.n_cols
    pascal = pair_to_matrix(pascal_power(phi, size - 1), size)
    if transpose:
        pascal = pascal.transpose()
    product = pascal @ matrix if side == "left" else matrix @ pascal
    return product == matrix.sign_conjugate()


def companion_b(a):
    """
    Companion series :math:`b(x) = x / \\bar{h}(x)` where :math:`h = x a(x)`, so that
    :math:`b(x a(x)) = a(x)`.

    Returns
    -------
    b : Series
        Exact through ``a.order``.

    Raises
    ------
    BadConstantTerm
        if :math:`a(0) \\neq 1`.
    """
    if a.order < 0 or a.coeffs[0] != 1:
        raise BadConstantTerm("Companion series require a(0) = 1")
    hbar = series_reversion(series_mul_xpow(a, 1))
    return series_inv(series_div_xpow(hbar, 1))


def verify_theorem1(a, n_rows):
    """
    Check the identities relating the Riordan matrices of :math:`a` to powers of its
    companion series :math:`b`, through ``n_rows`` rows:

    * row :math:`n` of :math:`(1 + x(\\log a)', x a)` is :math:`J_n` of :math:`b^n` truncated to degree :math:`n`;
    * row :math:`n` of :math:`(a, x a)` is :math:`J_n` of :math:`(1 - x(\\log b)') b^{n+1}` truncated to degree :math:`n`;
    * :math:`[x^n] a^m = \\frac{m}{m+n} [x^n] b^{m+n}` for :math:`1 \\leq m, n \\leq` ``n_rows``;
    * :math:`(a, xa)^{-1} = (b^{-1}, x b^{-1})` and
      :math:`(1 + x(\\log a)', xa)^{-1} = (1 - x(\\log b)', x b^{-1})`.

    Parameters
    ----------
    a : Series
        Series with :math:`a(0) = 1`, known through at least ``n_rows``.
    n_rows : int

    Returns
    -------
    report : CheckReport

    Raises
    ------
    BadConstantTerm
        if :math:`a(0) \\neq 1`.
    InsufficientOrder
        if ``a`` is not known through order ``n_rows``.
    """
    if a.order < 0 or a.coeffs[0] != 1:
        raise BadConstantTerm("Companion identities require a(0) = 1")
    if a.order < n_rows:
        raise InsufficientOrder(f"Series of order {a.order} is too short for {n_rows} rows")
    LOG.debug("Checking companion identities through %d rows", n_rows)

    order = n_rows
    a = a.truncate(order)
    b = companion_b(a)
    xa = series_mul_xpow(a, 1).truncate(order)
    b_inv = series_inv(b)
    x_b_inv = series_mul_xpow(b_inv, 1).truncate(order)
    log_a = log_deriv_factor(a)
    log_b = 2 - log_deriv_factor(b)

    first = pair_to_matrix(make_pair(log_a, xa), n_rows)
    second = pair_to_matrix(make_pair(a, xa), n_rows)

    identity1, identity2 = True, True
    power = Series.one(order)
    for n in range(n_rows):
        expected1 = Poly(power.coeffs[: n + 1]).reverse(n)
        power = series_mul(power, b)
        expected2 = Poly(series_mul(log_b, power).coeffs[: n + 1]).reverse(n)
        identity1 = identity1 and first.row_poly(n) == expected1
        identity2 = identity2 and second.row_poly(n) == expected2

    a_powers, b_powers = [Series.one(order)], [Series.one(order)]
    for _ in range(n_rows):
        a_powers.append(series_mul(a_powers[-1], a))
    for _ in range(2 * n_rows):
        b_powers.append(series_mul(b_powers[-1], b))
    lagrange = all(
        a_powers[m].coeffs[n] == Fraction(m, m + n) * b_powers[m + n].coeffs[n]
        for m in range(1, n_rows + 1)
        for n in range(1, n_rows + 1)
    )

    inverse1 = pair_to_matrix(pair_inverse(make_pair(a, xa)), n_rows) == pair_to_matrix(
        make_pair(b_inv, x_b_inv), n_rows
    )
    inverse2 = pair_to_matrix(pair_inverse(make_pair(log_a, xa)), n_rows) == pair_to_matrix(
        make_pair(log_b, x_b_inv), n_rows
    )

    return CheckReport(
        "theorem1",
        [
            ("identity1", identity1),
            ("identity2", identity2),
            ("lagrange", lagrange),
            ("inverse1", inverse1),
            ("inverse2", inverse2),
        ],
    )

# -*- coding: utf-8 -*-
"""
Fibonacci bases
===============

The bases :math:`A` (formal power series) and :math:`B` (polynomials) built from the
pseudo-eigenbases of the transformations of the first and second type, their duality,
the action of :math:`B` on series with its kernel and right inverses, and the
generalized bases :math:`A_{(\\varphi, \\beta)}`, :math:`B_{(\\varphi, \\beta)}`.

Columns of A-kind bases are series; columns of B-kind bases are polynomials:

* :math:`A x^{2n} = e q^n`, :math:`A x^{2n+1} = o q^n` with
  :math:`e = (1 + (\\varphi/2) x)/D`, :math:`o = x/D`, :math:`q = x^2/D` and
  :math:`D = 1 + \\varphi x + \\beta x^2`;
* :math:`B x^{2n} = g^n`, :math:`B x^{2n+1} = h g^n` with
  :math:`g = \\beta + \\varphi x + x^2` and :math:`h = \\varphi/2 + x`.

The classic bases are the members :math:`(1, 0)` rescaled by :math:`D_1^{-1}` (A) and
:math:`D_2^{-1}` (B), where :math:`D_1` halves even columns and :math:`D_2` halves odd columns.
"""
import logging
from enum import Enum
from fractions import Fraction

import numpy as np

from .fps import (
    FPSError,
    InsufficientOrder,
    Poly,
    Series,
    even_odd_split,
    series_compose,
    series_inv,
    series_mul,
    series_mul_xpow,
    series_pow,
    series_sqrt,
    series_stretch,
)
from .polyfam import Family, family_poly, reverse_J
from .report import CheckReport
from .riordan import (
    ExactMatrix,
    LowerMatrix,
    make_pair,
    pair_apply,
    pair_to_matrix,
    pascal_power,
    pseudo_eigen_check,
)

LOG = logging.getLogger(__name__)

# Parameters sampled by algebraic_relations_check when none are given
DEFAULT_PARAMETERS = ((1, 2), (Fraction(-1, 2), 3), (Fraction(3, 2), -2))


class ParityViolation(FPSError):
    """Raised when odd powers of a radical survive in a closed form claimed to be rational."""

    pass


class BasisKind(str, Enum):
    """Kinds of Fibonacci bases."""

    A = "A"
    B = "B"
    A_GEN = "A-gen"
    B_GEN = "B-gen"
    A_RED = "A-red"
    B_RED = "B-red"

    @property
    def series_columns(self):
        """Whether columns are series (A-kinds) rather than polynomials (B-kinds)."""
        return self.value.startswith("A")

    @property
    def general(self):
        return self.value.endswith("-gen")


class BasisMatrix:
    """
    Leading columns of a Fibonacci basis.

    Use :func:`build_basis` to create instances.

    Attributes
    ----------
    kind : BasisKind
    phi, beta : Fraction
        Parameters of the basis. Classic and reduced bases are rescalings of the member (1, 0).
    order : int
        Truncation order of series columns.
    columns : tuple
        ``Series`` (A-kinds) or ``Poly`` (B-kinds) columns.
    generators : tuple
        ``(e, o, q)`` for A-kinds, ``(g, h)`` for B-kinds.
    """

    __slots__ = ("kind", "phi", "beta", "order", "columns", "generators")

    def __init__(self, kind, generators, n_cols, order, phi, beta):
        if n_cols < 1:
            raise ValueError("Bases have at least one column")
        self.kind = BasisKind(kind)
        self.phi, self.beta = Fraction(phi), Fraction(beta)
        self.order = order
        self.generators = tuple(generators)

        if self.kind.series_columns:
            even, odd, step = self.generators
        else:
            step, odd = self.generators
            even = Poly.constant(1)
        columns = list()
        while len(columns) < n_cols:
            columns.extend((even, odd))
            even, odd = even * step, odd * step
        self.columns = tuple(columns[:n_cols])

    def __repr__(self):
        return f"< BasisMatrix {self.kind.value}({self.phi}, {self.beta}): {self.n_cols} columns >"

    @property
    def n_cols(self):
        return len(self.columns)

    def column(self, k):
        """Column ``k``, i.e. the image of :math:`x^k`."""
        return self.columns[k]

    def entry(self, n, k):
        """Coefficient of :math:`x^n` in column ``k``."""
        return self.columns[k][n]

    def to_matrix(self, n_rows=None):
        """
        Leading rows of the basis as an exact matrix.

        Parameters
        ----------
        n_rows : int, optional
            Number of rows. Default is the number of columns.

        Returns
        -------
        m : ExactMatrix
            A ``LowerMatrix`` for square blocks of A-kind bases.

        Raises
        ------
        InsufficientOrder
            if series columns are not known through row ``n_rows - 1``.
        """
        n_rows = self.n_cols if n_rows is None else n_rows
        if self.kind.series_columns and n_rows > self.order + 1:
            raise InsufficientOrder(
                f"Columns of order {self.order} cannot fill {n_rows} rows"
            )
        entries = [[self.entry(n, k) for k in range(self.n_cols)] for n in range(n_rows)]
        if self.kind.series_columns and n_rows == self.n_cols:
            return LowerMatrix(entries)
        return ExactMatrix(entries)

    def apply(self, a):
        """
        Image of a series or polynomial under the basis.

        A-kinds map :math:`a` to :math:`\\sum_n a_n A x^n`, exact through the smallest of the
        order of ``a``, the order of the columns and the number of columns minus one.
        B-kinds map a polynomial to a polynomial; a series is mapped to
        :math:`a_1(g) + h a_2(g)` where :math:`a = a_1(x^2) + x a_2(x^2)`,
        which is only defined for :math:`\\beta = 0`.

        Raises
        ------
        InsufficientOrder
            if a polynomial has more coefficients than the basis has columns.
        ValueError
            if a series is given to a B-kind basis with :math:`\\beta \\neq 0`.
        """
        if isinstance(a, Poly):
            if a.degree >= self.n_cols:
                raise InsufficientOrder(
                    f"Polynomial of degree {a.degree} exceeds the {self.n_cols} columns of the basis"
                )
            result = Series.zero(self.order) if self.kind.series_columns else Poly()
            for k, c in enumerate(a.coeffs):
                result = result + self.columns[k] * c
            return result

        if self.kind.series_columns:
            order = min(a.order, self.order, self.n_cols - 1)
            result = Series.zero(order)
            for k in range(order + 1):
                if a[k] != 0:
                    result = result + self.columns[k].truncate(order) * a[k]
            return result

        if self.beta != 0:
            raise ValueError("B-kind bases with beta != 0 only act on polynomials")
        return _apply_b_generators(*self.generators, a)

    def scale_columns(self, factors, kind, generators):
        """Basis of kind ``kind`` and ``generators`` whose columns are these columns times ``factors``."""
        new = object.__new__(BasisMatrix)
        new.kind = BasisKind(kind)
        new.phi, new.beta, new.order = self.phi, self.beta, self.order
        new.generators = tuple(generators)
        new.columns = tuple(c * Fraction(f) for c, f in zip(self.columns, factors))
        return new


def _apply_b_generators(g, h, a):
    a1, a2 = even_odd_split(a)
    g = g.to_series(a.order)
    return series_compose(a1, g) + h * series_compose(a2, g)


def _reduction_factors(kind, n_cols):
    """Diagonal of D1 (halves even columns) or D2 (halves odd columns)."""
    parity = 0 if kind.series_columns else 1
    return [Fraction(1, 2) if k % 2 == parity else Fraction(1) for k in range(n_cols)]


def build_basis(kind, phi=0, beta=0, n_cols=12, N=16):
    """
    Build the leading columns of a Fibonacci basis.

    Parameters
    ----------
    kind : BasisKind or str
        One of ``"A", "B", "A-gen", "B-gen", "A-red", "B-red"``.
    phi, beta : rational, optional
        Parameters of the generalized bases; ignored for the classic and reduced kinds.
    n_cols : int, optional
        Number of columns.
    N : int, optional
        Truncation order of series columns.

    Returns
    -------
    basis : BasisMatrix
    """
    kind = BasisKind(kind)
    if kind in {BasisKind.A_RED, BasisKind.B_RED}:
        classic = build_basis(BasisKind.A if kind.series_columns else BasisKind.B, n_cols=n_cols, N=N)
        first, second, *rest = classic.generators
        if kind.series_columns:
            generators = (first / 2, second, *rest)
        else:
            generators = (first, second / 2)
        return classic.scale_columns(_reduction_factors(kind, n_cols), kind, generators)

    if not kind.general:
        phi, beta = 1, 0
    phi, beta = Fraction(phi), Fraction(beta)

    if kind.series_columns:
        inverse = series_inv(Series([1, phi, beta], order=N))
        lead = Series([2, 1], order=N) if kind == BasisKind.A else Series([1, phi / 2], order=N)
        generators = (
            lead * inverse,
            Series.x(N) * inverse,
            Series([0, 0, 1], order=N) * inverse,
        )
    else:
        lead = Poly([1, 2]) if kind == BasisKind.B else Poly([phi / 2, 1])
        generators = (Poly([beta, phi, 1]), lead)

    basis = BasisMatrix(kind, generators, n_cols, N, phi, beta)
    LOG.debug("Built %r", basis)
    return basis


def pairing(a, c):
    """
    Duality pairing :math:`(a | c) = \\sum_n a_n c_n` between a series and a polynomial.

    Raises
    ------
    InsufficientOrder
        if ``a`` is not known through the degree of ``c``.
    """
    if not c:
        return Fraction(0)
    if a.order < c.degree:
        raise InsufficientOrder(
            f"Series of order {a.order} cannot be paired with a polynomial of degree {c.degree}"
        )
    return sum((a[n] * cn for n, cn in enumerate(c.coeffs)), Fraction(0))


_DUALITY_FAMILIES = {
    "classic": (BasisKind.A, BasisKind.B, 2),
    "reduced": (BasisKind.A_RED, BasisKind.B_RED, 1),
    "general": (BasisKind.A_GEN, BasisKind.B_GEN, 1),
}


def duality_check(family, phi=0, beta=0, n_max=12, N=16):
    """
    Duality of the A and B bases: :math:`(A x^n | B x^m) = s \\delta_{n,m}`, with
    :math:`s = 2` for the classic bases and :math:`s = 1` for the reduced and general ones,
    and the equivalent matrix statement :math:`s A^{-1} = B^T` on the leading block.

    Parameters
    ----------
    family : {"classic", "reduced", "general"}
    phi, beta : rational, optional
        Parameters of the general bases.
    n_max : int, optional
    N : int, optional
        Truncation order of the A columns, at least ``n_max``.

    Returns
    -------
    report : CheckReport

    Raises
    ------
    InsufficientOrder
        if ``N < n_max``.
    """
    try:
        kind_a, kind_b, scale = _DUALITY_FAMILIES[family]
    except KeyError:
        raise ValueError(f"Unknown basis family {family!r}")
    if N < n_max:
        raise InsufficientOrder(f"Pairing through index {n_max} requires order at least {n_max}")

    size = n_max + 1
    basis_a = build_basis(kind_a, phi, beta, size, N)
    basis_b = build_basis(kind_b, phi, beta, size, N)
    pairings = all(
        pairing(basis_a.column(n), basis_b.column(m)) == (scale if n == m else 0)
        for n in range(size)
        for m in range(size)
    )
    inverse = basis_a.to_matrix(size).inverse_lower() * scale == basis_b.to_matrix(size).T
    return CheckReport(f"duality-{family}", [("pairing", pairings), ("inverse", inverse)])


def _half_powers(c, phi, top, sign):
    """
    Terms :math:`(k, c_k \\varphi^k, (top + sign \\cdot k)/2)` of a polynomial evaluated
    at :math:`\\varphi` over a square root.
    """
    phi = Fraction(phi)
    for k, ck in enumerate(c.coeffs):
        if ck == 0:
            continue
        exponent = top + sign * k
        if exponent % 2 or exponent < 0:
            raise ParityViolation(
                f"Term of degree {k} leaves the radical power {exponent}/2"
            )
        yield k, ck * phi ** k, exponent // 2


def _radical_poly(c, phi, top, radicand):
    """The polynomial :math:`(\\sqrt{Q})^{top} c(\\varphi / \\sqrt{Q})`."""
    result = Poly()
    for _, coeff, exponent in _half_powers(c, phi, top, -1):
        result = result + radicand ** exponent * coeff
    return result


def _radical_series(c, phi, top, shift, radicand, N):
    """The series :math:`x^{shift} S^{-top/2} c(\\varphi x / \\sqrt{S})`, through order ``N``."""
    result = Series.zero(N)
    powers = dict()
    for k, coeff, exponent in _half_powers(c, phi, top, 1):
        if k + shift > N:
            continue
        if exponent not in powers:
            powers[exponent] = series_pow(radicand, -exponent)
        term = series_mul_xpow(powers[exponent], k + shift).truncate(N)
        result = result + term * coeff
    return result


def row_formula(kind, phi=0, beta=0, n=0, N=16):
    """
    Row ``n`` of a basis, :math:`\\sum_k [x^n] (\\text{column } k) \\, x^k`, computed from
    Lucas and Fibonacci polynomials.

    * classic A: :math:`x^n (L_{-n}(1/x) + F_{-n}(1/x))`;
    * classic B: :math:`x^n (L_{n+1}(x) + F_{n+1}(x))`;
    * general A: :math:`\\frac{1}{2} (\\sqrt{x^2 - \\beta})^n L_{-n}(\\varphi/\\sqrt{x^2 - \\beta})
      + x (\\sqrt{x^2 - \\beta})^{n-1} F_{-n}(\\varphi/\\sqrt{x^2 - \\beta})`;
    * general B: :math:`\\frac{x^n}{2 S^{(n+1)/2}} L_{n+1}(\\varphi x/\\sqrt{S})
      + \\frac{x^n}{S^{(n+2)/2}} F_{n+1}(\\varphi x/\\sqrt{S})`, :math:`S = 1 - \\beta x^2`.

    Reduced bases are the general bases at :math:`(1, 0)`.

    Returns
    -------
    row : Poly or Series
        A polynomial, except for general B with :math:`\\beta \\neq 0`, whose rows are
        infinite: the row is then a series through order ``N``.

    Raises
    ------
    ParityViolation
        if odd powers of a radical survive.
    """
    kind = BasisKind(kind)
    if n < 0:
        raise ValueError("Rows are indexed by n >= 0")
    if kind == BasisKind.A:
        return reverse_J(family_poly(Family.L, -n) + family_poly(Family.F, -n), n)
    if kind == BasisKind.B:
        return (family_poly(Family.L, n + 1) + family_poly(Family.F, n + 1)).mul_xpow(n)
    if not kind.general:
        phi, beta = 1, 0
    phi, beta = Fraction(phi), Fraction(beta)

    if kind.series_columns:
        radicand = Poly([-beta, 0, 1])
        lucas = _radical_poly(family_poly(Family.L, -n), phi, n, radicand)
        fibonacci = _radical_poly(family_poly(Family.F, -n), phi, n - 1, radicand)
        return lucas / 2 + fibonacci.mul_xpow(1)

    order = max(N, 2 * n + 1) if beta == 0 else N
    radicand = Series([1, 0, -beta], order=order)
    row = _radical_series(family_poly(Family.L, n + 1), phi, n + 1, n, radicand, order) / 2
    row = row + _radical_series(family_poly(Family.F, n + 1), phi, n + 2, n, radicand, order)
    if beta == 0:
        return row.to_poly()
    return row


def row_formula_check(kind, phi=0, beta=0, n_max=12, N=16):
    """
    Whether :func:`row_formula` equals the rows of the basis built column by column,
    for :math:`0 \\leq n \\leq` ``n_max``. Rows of general B with :math:`\\beta \\neq 0` are
    compared through :math:`x^N`.

    Returns
    -------
    holds : bool
    """
    kind = BasisKind(kind)
    n_rows = n_max + 1
    if kind.series_columns:
        matrix = build_basis(kind, phi, beta, n_rows, max(N, n_max)).to_matrix(n_rows)
        return all(matrix.row_poly(n) == row_formula(kind, phi, beta, n, N) for n in range(n_rows))

    infinite_rows = kind.general and Fraction(beta) != 0
    n_cols = N + 1 if infinite_rows else 2 * n_rows
    matrix = build_basis(kind, phi, beta, n_cols, N).to_matrix(n_rows)
    for n in range(n_rows):
        expected = row_formula(kind, phi, beta, n, N)
        if infinite_rows:
            holds = Series(matrix.entries[n, :], order=N) == expected
        else:
            holds = matrix.row_poly(n) == expected
        if not holds:
            LOG.warning("Row %d of basis %s does not match its closed form", n, kind.value)
            return False
    return True


def apply_B(a, N=None):
    """
    Action of the classic basis :math:`B` on a series:
    :math:`B a = a_1(x + x^2) + (1 + 2x) a_2(x + x^2)` where :math:`a = a_1(x^2) + x a_2(x^2)`.

    Parameters
    ----------
    a : Series
    N : int, optional
        Requested order. Default is the order of ``a``.

    Returns
    -------
    s : Series
        Exact through :math:`\\min(N, \\lfloor (N_a - 1)/2 \\rfloor)`, the smallest order of
        the even and odd parts of ``a``.
    """
    result = _apply_b_generators(Poly([0, 1, 1]), Poly([1, 2]), a)
    N = a.order if N is None else N
    return result.truncate(min(N, result.order))


def _sqrt_one_plus_4x2(order):
    return series_sqrt(Series([1, 0, 4], order=order))


def kernel_check(c, N=16):
    """
    Whether :math:`B` annihilates :math:`c(x^2)(\\sqrt{1 + 4x^2} - x)` through order ``N``.

    Raises
    ------
    InsufficientOrder
        if ``c`` is not known through order ``N``.
    """
    c = c.truncate(N)
    order = 2 * N + 1
    a = series_stretch(c, 2) * (_sqrt_one_plus_4x2(order) - Series.x(order))
    return apply_B(a, N).is_zero()


def right_inverse_B(which, N=16):
    """
    Riordan pairs that are right inverses of :math:`B`:
    :math:`B_1^{-1} = (1, G)` and :math:`B_2^{-1} = (x/\\sqrt{1 + 4x^2}, G)` with
    :math:`G = (\\sqrt{1 + 4x^2} - 1)/2`.

    Both pairs are stretched (:math:`G` has valuation 2). They are expanded through order
    :math:`2N + 1` so that :math:`B` maps column :math:`n` back to :math:`x^n` through :math:`x^N`.

    Parameters
    ----------
    which : {1, 2}
    N : int, optional

    Returns
    -------
    pair : RiordanPair
    """
    order = 2 * N + 1
    root = _sqrt_one_plus_4x2(order)
    g = (root - 1) / 2
    if which == 1:
        return make_pair(Series.one(order), g)
    if which == 2:
        return make_pair(series_mul_xpow(series_inv(root), 1).truncate(order), g)
    raise ValueError(f"Unknown right inverse {which!r}, expected 1 or 2")


def right_inverse_column(which, n, N=16):
    """Column ``n`` of a right inverse of :math:`B`, through order :math:`2N + 1`."""
    pair = right_inverse_B(which, N)
    return series_mul(pair.f, series_pow(pair.g, n))


def right_inverse_check(which, n_max=16, N=16):
    """
    Whether :math:`B` maps column :math:`n` of the right inverse ``which`` to :math:`x^n`
    through order ``N``, for :math:`n \\leq` ``n_max``.
    """
    pair = right_inverse_B(which, N)
    column = pair.f
    for n in range(n_max + 1):
        if apply_B(column, N) != Series.monomial(n, N):
            LOG.warning("Right inverse %d fails on x^%d", which, n)
            return False
        column = series_mul(column, pair.g)
    return True


def coordinates_in_B(a, which=1, N=16):
    """
    Coordinates of a series in the basis :math:`B`: a series :math:`b` with :math:`B b = a`
    through order ``N``, computed by applying a right inverse of :math:`B`.

    Coordinates are not unique: adding an element of the kernel of :math:`B`
    (see :func:`kernel_check`) gives other coordinates.

    Returns
    -------
    b : Series
        Exact through order :math:`2N + 1`.

    Raises
    ------
    InsufficientOrder
        if ``a`` is not known through order ``N``.
    """
    return pair_apply(right_inverse_B(which, N), a.truncate(N))


def example2_check(n, N=16):
    """
    Two coordinate vectors of :math:`(1 + x)^n` in the basis :math:`B`:
    :math:`((1 + \\sqrt{1 + 4x^2})/2)^n` (through the right inverse :math:`B_1^{-1}`)
    and :math:`(x^n L_n(1/x) + x^n F_n(1/x))/2` (through :math:`2 A^{-1} = B^T`). Their difference
    :math:`x^{n-1} F_n(1/x)(\\sqrt{1 + 4x^2} - x)/2` is in the kernel of :math:`B`.

    Returns
    -------
    report : CheckReport
    """
    if n < 0:
        raise ValueError("Example powers are indexed by n >= 0")
    order = 2 * N + 1
    target = Poly([1, 1]) ** n
    root = _sqrt_one_plus_4x2(order)

    first = coordinates_in_B(target.to_series(N), 1, N)
    closed = series_pow((root + 1) / 2, n)
    second = (
        reverse_J(family_poly(Family.L, n), n) + reverse_J(family_poly(Family.F, n), n)
    ) / 2
    second = second.to_series(order)

    fibonacci = reverse_J(family_poly(Family.F, n), n - 1) if n > 0 else Poly()
    if any(c != 0 for c in fibonacci.coeffs[1::2]):
        raise ParityViolation("Reversed Fibonacci polynomial is not even")
    difference = fibonacci * (root - Series.x(order)) / 2
    kernel_coeffs = Series([c / 2 for c in fibonacci.coeffs[0::2]], order=N)

    return CheckReport(
        f"example2-{n}",
        [
            ("closed_form", first == closed),
            ("first_route", apply_B(first, N) == target.to_series(N)),
            ("second_route", apply_B(second, N) == target.to_series(N)),
            ("difference", first - second == difference),
            ("kernel", kernel_check(kernel_coeffs, N)),
        ],
    )


def theorem4_check(phi, beta1, beta2, n_cols=10, N=16, beta3=None):
    """
    Group law of the generalized bases:
    :math:`A_{(\\varphi,\\beta_1)} A_{(0,\\beta_2)} = A_{(\\varphi,\\beta_1+\\beta_2)}` and
    :math:`B_{(\\varphi,\\beta_1)} B_{(0,\\beta_2)} = B_{(\\varphi,\\beta_1+\\beta_2)}` on the leading
    ``n_cols`` columns, as well as associativity with a third factor :math:`(0, \\beta_3)`
    (default :math:`\\beta_3 = \\beta_2`).

    Products of A-kind blocks are exact since the matrices are lower-triangular; products of
    B-kind blocks are exact since :math:`B_{(0,\\beta)}` is upper-triangular.

    Returns
    -------
    report : CheckReport

    Raises
    ------
    InsufficientOrder
        if ``N < n_cols - 1``.
    """
    if N < n_cols - 1:
        raise InsufficientOrder(f"{n_cols} columns require order at least {n_cols - 1}")
    phi, beta1, beta2 = Fraction(phi), Fraction(beta1), Fraction(beta2)
    beta3 = beta2 if beta3 is None else Fraction(beta3)

    def block(kind, p, b):
        return build_basis(kind, p, b, n_cols, N).to_matrix(n_cols)

    results = list()
    for kind in (BasisKind.A_GEN, BasisKind.B_GEN):
        left = block(kind, phi, beta1)
        second, third = block(kind, 0, beta2), block(kind, 0, beta3)
        product = left @ second
        label = "a" if kind.series_columns else "b"
        results.append((f"{label}_product", product == block(kind, phi, beta1 + beta2)))
        results.append(
            (
                f"{label}_associativity",
                product @ third == left @ (second @ third) == block(kind, phi, beta1 + beta2 + beta3),
            )
        )
    return CheckReport("theorem4", results)


def algebraic_relations_check(N=12, parameters=None):
    """
    Relations between bases, checked entrywise on the leading :math:`(N + 1) \\times (N + 1)` block
    for each :math:`(\\varphi, \\beta)` in ``parameters``:

    * Pascal embedding :math:`P^\\varphi = A_{(-2\\varphi, \\varphi^2)}` and
      :math:`(P^\\varphi)^T = B_{(2\\varphi, \\varphi^2)}`;
    * :math:`(A_{(0,\\beta)})^T = B_{(0,-\\beta)}`;
    * reduced bases: :math:`A D_1 = A_{(1,0)}` and :math:`B D_2 = B_{(1,0)}`;
    * inverses: :math:`2 A^{-1} = B^T` and :math:`A_{(\\varphi,\\beta)}^{-1} = B_{(\\varphi,\\beta)}^T`;
    * pseudo-eigen relations :math:`P^\\varphi A_{(\\varphi,\\beta)} = M A_{(\\varphi,\\beta)} M` and
      :math:`(P^{-\\varphi})^T B_{(\\varphi,\\beta)} = M B_{(\\varphi,\\beta)} M`, and their classic
      forms :math:`P A = M A M`, :math:`(P^{-1})^T B = M B M`;
    * :math:`A_{(0,0)}` and :math:`B_{(0,0)}` are identities.

    Returns
    -------
    report : CheckReport
    """
    parameters = DEFAULT_PARAMETERS if parameters is None else parameters
    size = N + 1

    def block(kind, phi=0, beta=0):
        return build_basis(kind, phi, beta, size, N).to_matrix(size)

    classic_a, classic_b = block(BasisKind.A), block(BasisKind.B)
    report = CheckReport("algebraic-relations")
    report.add(
        "reduced_a",
        classic_a.scale_columns(_reduction_factors(BasisKind.A, size)) == block(BasisKind.A_GEN, 1, 0)
        and block(BasisKind.A_RED) == block(BasisKind.A_GEN, 1, 0),
    )
    report.add(
        "reduced_b",
        classic_b.scale_columns(_reduction_factors(BasisKind.B, size)) == block(BasisKind.B_GEN, 1, 0)
        and block(BasisKind.B_RED) == block(BasisKind.B_GEN, 1, 0),
    )
    report.add("classic_inverse", classic_a.inverse_lower() * 2 == classic_b.T)
    report.add("classic_pseudo_eigen_a", pseudo_eigen_check(classic_a, 1, size))
    report.add("classic_pseudo_eigen_b", pseudo_eigen_check(classic_b, -1, size, transpose=True))
    report.add(
        "identity",
        block(BasisKind.A_GEN) == ExactMatrix.identity(size)
        and block(BasisKind.B_GEN) == ExactMatrix.identity(size),
    )

    checks = {
        "pascal_embedding": [],
        "pascal_transpose": [],
        "transpose": [],
        "general_inverse": [],
        "pseudo_eigen_a": [],
        "pseudo_eigen_b": [],
    }
    for phi, beta in parameters:
        phi, beta = Fraction(phi), Fraction(beta)
        pascal = pair_to_matrix(pascal_power(phi, N), size)
        general_a, general_b = block(BasisKind.A_GEN, phi, beta), block(BasisKind.B_GEN, phi, beta)
        checks["pascal_embedding"].append(pascal == block(BasisKind.A_GEN, -2 * phi, phi ** 2))
        checks["pascal_transpose"].append(pascal.T == block(BasisKind.B_GEN, 2 * phi, phi ** 2))
        checks["transpose"].append(block(BasisKind.A_GEN, 0, beta).T == block(BasisKind.B_GEN, 0, -beta))
        checks["general_inverse"].append(general_a.inverse_lower() == general_b.T)
        checks["pseudo_eigen_a"].append(pseudo_eigen_check(general_a, phi, size))
        checks["pseudo_eigen_b"].append(pseudo_eigen_check(general_b, -phi, size, transpose=True))
    for label, outcomes in checks.items():
        report.add(label, all(outcomes))

    if not report:
        LOG.warning("Basis relations failed: %s", ", ".join(report.failures))
    return report


def example3_check(phi, n, N=16):
    """
    Expansions of the Pascal columns and rows in Lucas and Fibonacci polynomials:

    * :math:`(\\varphi + x)^n = \\frac{1}{2}(\\sqrt{x^2 - \\varphi^2})^n L_n(2\\varphi/\\sqrt{x^2 - \\varphi^2})
      + x (\\sqrt{x^2 - \\varphi^2})^{n-1} F_n(2\\varphi/\\sqrt{x^2 - \\varphi^2})`, exactly;
    * :math:`(1 - \\varphi x)^{-n-1} = \\frac{1}{2 S^{(n+1)/2}} L_{n+1}(2\\varphi x/\\sqrt{S})
      + \\frac{1}{S^{(n+2)/2}} F_{n+1}(2\\varphi x/\\sqrt{S})`, :math:`S = 1 - \\varphi^2 x^2`,
      through order ``N``.

    Returns
    -------
    report : CheckReport

    Raises
    ------
    ParityViolation
        if odd powers of a radical survive.
    """
    if n < 0:
        raise ValueError("Example powers are indexed by n >= 0")
    phi = Fraction(phi)
    radicand = Poly([-(phi ** 2), 0, 1])
    polynomial = _radical_poly(family_poly(Family.L, n), 2 * phi, n, radicand) / 2
    polynomial = polynomial + _radical_poly(family_poly(Family.F, n), 2 * phi, n - 1, radicand).mul_xpow(1)

    radicand = Series([1, 0, -(phi ** 2)], order=N)
    series = _radical_series(family_poly(Family.L, n + 1), 2 * phi, n + 1, 0, radicand, N) / 2
    series = series + _radical_series(family_poly(Family.F, n + 1), 2 * phi, n + 2, 0, radicand, N)

    return CheckReport(
        f"example3-{n}",
        [
            ("polynomial", polynomial == Poly([phi, 1]) ** n),
            ("series", series == series_pow(Series([1, -phi], order=N), -(n + 1))),
        ],
    )


def _floats(series):
    return np.array([float(c) for c in series.coeffs], dtype=float)


def golden_ratio_check(N=12, tol=1e-9):
    """
    Images of :math:`(1 \\pm \\sqrt{5} x)/(1 - x^2)` under :math:`A` and of
    :math:`(\\pm\\sqrt{5} + x)/(1 - x^2)` under :math:`B`, compared to the powers of
    :math:`\\alpha = (1 + \\sqrt{5})/2` through order ``N``.

    Rational and :math:`\\sqrt{5}` parts are computed exactly and combined in floating point.

    Returns
    -------
    report : CheckReport
    """
    alpha = (1 + np.sqrt(5.0)) / 2
    root5 = np.sqrt(5.0)
    n = np.arange(N + 1)

    basis = build_basis(BasisKind.A, n_cols=N + 1, N=N)
    even = series_inv(Series([1, 0, -1], order=N))
    rational, radical = _floats(basis.apply(even)), _floats(basis.apply(series_mul_xpow(even, 1).truncate(N)))

    order = 2 * N + 1
    even = series_inv(Series([1, 0, -1], order=order))
    b_even = _floats(apply_B(even, N))
    b_odd = _floats(apply_B(series_mul_xpow(even, 1).truncate(order), N))

    def close(computed, expected):
        return bool(np.allclose(computed, expected, rtol=tol, atol=tol))

    return CheckReport(
        "golden-ratio",
        [
            ("alpha", close(alpha ** 2, alpha + 1)),
            ("a_plus", close(rational + root5 * radical, 2 * alpha ** (-n))),
            ("b_plus", close(root5 * b_even + b_odd, 2 * alpha ** (n + 1))),
            ("a_minus", close(rational - root5 * radical, 2 * (-alpha) ** n)),
            ("b_minus", close(-root5 * b_even + b_odd, 2 * (-1.0) ** (n + 1) * alpha ** (-(n + 1)))),
        ],
    )


def _ratio(numerator, denominator, N):
    return Series(numerator, order=N) * series_inv(Series(denominator, order=N))


def signature_check(N=10):
    """
    Fibonacci and Lucas sequences as images of geometric series under the bases, through order ``N``:

    * :math:`A \\frac{1}{1-x} = \\frac{2(1+x)}{1+x-x^2}`, :math:`A \\frac{1}{1+x} = \\frac{2}{1+x-x^2}`;
    * :math:`B \\frac{1}{1-x} = \\frac{2(1+x)}{1-x-x^2}`, :math:`B \\frac{-1}{1+x} = \\frac{2x}{1-x-x^2}`;
    * the same four images under the reduced bases;
    * the Fibonacci matrix :math:`(1, x(1+x))`, the Lucas matrix :math:`(1+2x, x(1+x))`,
      the even-column matrix :math:`((2+x)/(1+x), x^2/(1+x))` and the odd-column matrix
      :math:`(x/(1+x), x^2/(1+x))` applied to :math:`1/(1-x)`.

    Returns
    -------
    report : CheckReport
    """
    order = 2 * N + 1
    geometric, alternating = _ratio([1], [1, -1], N), _ratio([1], [1, 1], N)
    wide_geometric, wide_alternating = _ratio([1], [1, -1], order), _ratio([-1], [1, 1], order)

    classic_a = build_basis(BasisKind.A, n_cols=N + 1, N=N)
    reduced_a = build_basis(BasisKind.A_RED, n_cols=N + 1, N=N)
    reduced_b = build_basis(BasisKind.B_RED, n_cols=1, N=N)

    def images(numerator, denominator):
        return _ratio(numerator, denominator, N)

    fibonacci = make_pair(Series.one(N), Series([0, 1, 1], order=N))
    lucas = make_pair(Series([1, 2], order=N), Series([0, 1, 1], order=N))
    inverse = series_inv(Series([1, 1], order=N))
    even_columns = make_pair(Series([2, 1], order=N) * inverse, Series([0, 0, 1], order=N) * inverse)
    odd_columns = make_pair(Series([0, 1], order=N) * inverse, Series([0, 0, 1], order=N) * inverse)

    return CheckReport(
        "signatures",
        [
            ("a_geometric", classic_a.apply(geometric) == images([2, 2], [1, 1, -1])),
            ("a_alternating", classic_a.apply(alternating) == images([2], [1, 1, -1])),
            ("b_geometric", apply_B(wide_geometric, N) == images([2, 2], [1, -1, -1])),
            ("b_alternating", apply_B(wide_alternating, N) == images([0, 2], [1, -1, -1])),
            ("reduced_a_geometric", reduced_a.apply(geometric) == images([1, Fraction(3, 2)], [1, 1, -1])),
            ("reduced_a_alternating", reduced_a.apply(alternating) == images([1, Fraction(-1, 2)], [1, 1, -1])),
            (
                "reduced_b_geometric",
                reduced_b.apply(wide_geometric).truncate(N) == images([Fraction(3, 2), 1], [1, -1, -1]),
            ),
            (
                "reduced_b_alternating",
                reduced_b.apply(wide_alternating).truncate(N) == images([Fraction(-1, 2), 1], [1, -1, -1]),
            ),
            ("fibonacci_matrix", pair_apply(fibonacci, geometric) == images([1], [1, -1, -1])),
            ("lucas_matrix", pair_apply(lucas, geometric) == images([1, 2], [1, -1, -1])),
            ("even_columns", pair_apply(even_columns, geometric) == images([2, 1], [1, 1, -1])),
            ("odd_columns", pair_apply(odd_columns, geometric) == images([0, 1], [1, 1, -1])),
        ],
    )

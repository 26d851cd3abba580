# -*- coding: utf-8 -*-
"""
Verification suites
===================

Each suite groups the checks of one part of the library. Suites are configured by
``SuiteParameter`` descriptors and registered automatically: every concrete subclass of
``AbstractSuite`` is available by its ``name``.

Suites are independent; :func:`run_suites` runs them concurrently.
"""
import logging
import traceback
from abc import abstractmethod
from fractions import Fraction
from functools import partial, wraps

import numpy as np
from npstreams import pmap

from . import fibbasis, polyfam, riordan, transforms
from .fibbasis import BasisKind
from .fps import Poly, Series
from .meta import MetaSuite, SuiteParameter
from .polyfam import Family
from .report import CheckReport
from .riordan import ExactMatrix, make_pair, pair_to_matrix

LOG = logging.getLogger(__name__)

# Every check operation of the library, by name. Suites declare which ones they cover.
CHECK_MANIFEST = frozenset(
    {
        "riordan.verify_theorem1",
        "riordan.pseudo_eigen_check",
        "polyfam.family_row_check",
        "polyfam.root_form_check",
        "polyfam.trig_product_check",
        "polyfam.gf_identities_check",
        "transforms.type1_cs_check",
        "transforms.type1_quadratic_check",
        "transforms.catalan_power_check",
        "transforms.type2_tu_check",
        "transforms.type2_quadratic_check",
        "transforms.type2_parity_check",
        "transforms.type2_root_check",
        "transforms.type2_special_cases_check",
        "transforms.type1_pseudo_involution_check",
        "transforms.type2_pseudo_involution_check",
        "transforms.type2_column_split_check",
        "fibbasis.duality_check",
        "fibbasis.row_formula_check",
        "fibbasis.kernel_check",
        "fibbasis.right_inverse_check",
        "fibbasis.example2_check",
        "fibbasis.theorem4_check",
        "fibbasis.algebraic_relations_check",
        "fibbasis.example3_check",
        "fibbasis.golden_ratio_check",
        "fibbasis.signature_check",
    }
)


class CrashedCheck:
    """Falsy outcome of a check that raised an exception."""

    __slots__ = ("traceback",)

    def __init__(self, traceback):
        self.traceback = traceback

    def __bool__(self):
        return False


def error_aware(func):
    """
    Wrap a check with a try/except. Exceptions are logged and turned into a
    ``CrashedCheck`` carrying the formatted traceback.

    Keyboard interrupts are never ignored.
    """

    @wraps(func)
    def aware_func(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except KeyboardInterrupt:
            raise
        except Exception:
            exc = traceback.format_exc()
            LOG.error(exc)
            return CrashedCheck(exc)

    return aware_func


class SuiteResult:
    """
    Picklable outcome of a suite.

    Attributes
    ----------
    name : str
    passed : bool
    lines : list of str
        Buffered report, one line per check.
    n_checks : int
    """

    def __init__(self, name, passed, lines, n_checks):
        self.name = name
        self.passed = passed
        self.lines = lines
        self.n_checks = n_checks

    def __repr__(self):
        return f"< SuiteResult {self.name}: {'passed' if self.passed else 'failed'} ({self.n_checks} checks) >"


def random_rational(rng, bound=20, nonzero=False):
    """Random rational with numerator and denominator bounded by ``bound``."""
    while True:
        value = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
        if value or not nonzero:
            return value


def random_series(rng, order, constant=None, bound=20):
    """Random series through ``order``; the constant term is ``constant`` if given, nonzero otherwise."""
    head = random_rational(rng, bound, nonzero=True) if constant is None else constant
    return Series([head] + [random_rational(rng, bound) for _ in range(order)], order=order)


class AbstractSuite(metaclass=MetaSuite):
    """
    Abstract verification suite.

    Minimally, the following must be specialized in subclasses:

        * name (class attribute)
        * covers (class attribute): names of the check operations exercised;
        * checks: generator of ``(label, thunk)`` pairs.

    Parameters
    ----------
    parameters : keyword arguments
        Values of suite parameters. Unknown keys are ignored.
    """

    name = "abstract"
    covers = frozenset()

    order = SuiteParameter("order", int, 16)
    rows = SuiteParameter("rows", int, 12)
    seed = SuiteParameter("seed", int, 7)
    tol = SuiteParameter("tol", float, 1e-9)
    samples = SuiteParameter("samples", int, 5)

    def __init__(self, **parameters):
        for key, value in parameters.items():
            if key in self.valid_parameters:
                setattr(self, key, value)
        self.rng = np.random.default_rng(self.seed)

    def __repr__(self):
        parameters = ", ".join(f"{k}={getattr(self, k)}" for k in sorted(self.valid_parameters))
        return f"< {type(self).__name__}({parameters}) >"

    @abstractmethod
    def checks(self):
        """Generator of ``(label, thunk)`` pairs, where ``thunk()`` computes the outcome."""
        pass

    def run(self):
        """
        Run every check of the suite.

        Returns
        -------
        result : SuiteResult
        """
        LOG.debug("Running %r", self)
        lines, passed, n_checks = list(), True, 0
        for label, thunk in self.checks():
            outcome = error_aware(thunk)()
            n_checks += 1
            if outcome:
                lines.append(f"PASS {self.name}.{label}")
                continue
            passed = False
            if isinstance(outcome, CrashedCheck):
                last = outcome.traceback.strip().splitlines()[-1]
                lines.append(f"ERROR {self.name}.{label}: {last}")
            elif isinstance(outcome, CheckReport):
                lines.append(f"FAIL {self.name}.{label}: {', '.join(outcome.failures)}")
            else:
                lines.append(f"FAIL {self.name}.{label}")
            LOG.warning(lines[-1])
        return SuiteResult(self.name, passed, lines, n_checks)

    def parameters(self):
        """Random rational parameters :math:`(\\varphi, \\beta)`, ``samples`` of them."""
        return [(random_rational(self.rng), random_rational(self.rng)) for _ in range(self.samples)]


def _pad(rows, size):
    return [list(row) + [0] * (size - len(row)) for row in rows]


def _matches(matrix, rows):
    """Whether the leading rows of ``matrix`` are ``rows``, padded with zeros."""
    return matrix.block(len(rows)) == ExactMatrix(_pad(rows, len(rows)))


class MatricesSuite(AbstractSuite):
    """Reference matrices of classic Riordan pairs and of the Fibonacci bases."""

    name = "matrices"
    covers = frozenset()

    CHEBYSHEV_C = [[1], [0, 1], [-2, 0, 1], [0, -3, 0, 1], [2, 0, -4, 0, 1], [0, 5, 0, -5, 0, 1], [-2, 0, 9, 0, -6, 0, 1]]
    CHEBYSHEV_S = [[1], [0, 1], [-1, 0, 1], [0, -2, 0, 1], [1, 0, -3, 0, 1], [0, 3, 0, -4, 0, 1], [-1, 0, 6, 0, -5, 0, 1]]
    PASCAL = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1], [1, 5, 10, 10, 5, 1]]
    STRETCHED = {
        ((1, -1), (1, -2, 1)): [[1], [1], [1, 1], [1, 3], [1, 6, 1], [1, 10, 5]],
        ((0, 1), (1, -2, 1)): [[0], [1], [2], [3, 1], [4, 4], [5, 10, 1]],
        ((1, -1), (1, -2)): [[1], [1], [2, 1], [4, 3], [8, 8, 1], [16, 20, 5]],
        ((0, 1), (1, -2)): [[0], [1], [2], [4, 1], [8, 4], [16, 12, 1]],
    }
    BASIS_A = [[2], [-1, 1], [1, -1, 2], [-1, 1, -3, 1], [1, -1, 4, -2, 2]]
    BASIS_B = [
        [1, 1, 0, 0, 0, 0, 0],
        [0, 2, 1, 1, 0, 0, 0],
        [0, 0, 1, 3, 1, 1, 0],
        [0, 0, 0, 2, 2, 4, 1],
        [0, 0, 0, 0, 1, 5, 3],
        [0, 0, 0, 0, 0, 2, 3],
        [0, 0, 0, 0, 0, 0, 1],
    ]
    RIGHT_INVERSES = {
        1: {1: [0, 0, 1, 0, -1, 0, 2, 0, -5], 2: [0, 0, 0, 0, 1, 0, -2, 0, 5], 3: [0, 0, 0, 0, 0, 0, 1, 0, -3]},
        2: {0: [0, 1, 0, -2, 0, 6, 0, -20], 1: [0, 0, 0, 1, 0, -3, 0, 10], 2: [0, 0, 0, 0, 0, 1, 0, -4]},
    }

    def checks(self):
        yield "chebyshev_first_kind", partial(self._dickson, Family.C, self.CHEBYSHEV_C)
        yield "chebyshev_second_kind", partial(self._dickson, Family.S, self.CHEBYSHEV_S)
        yield "pascal", lambda: _matches(pair_to_matrix(riordan.pascal_power(1, 5), 6), self.PASCAL)
        for (numerator, denominator), rows in self.STRETCHED.items():
            yield f"stretched{numerator}/{denominator}", partial(self._stretched, numerator, denominator, rows)
        yield "basis_a", lambda: _matches(fibbasis.build_basis(BasisKind.A, n_cols=5, N=4).to_matrix(), self.BASIS_A)
        yield "basis_b", lambda: fibbasis.build_basis(BasisKind.B, n_cols=7).to_matrix(7) == ExactMatrix(
            self.BASIS_B
        )
        for which, columns in self.RIGHT_INVERSES.items():
            yield f"right_inverse{which}", partial(self._right_inverse, which, columns)

    @staticmethod
    def _dickson(tag, rows):
        return _matches(pair_to_matrix(polyfam.dickson_pair(tag, order=len(rows) - 1), len(rows)), rows)

    @staticmethod
    def _stretched(numerator, denominator, rows):
        order = len(rows) - 1
        inverse = 1 / Series(denominator, order=order)
        pair = make_pair(Series(numerator, order=order) * inverse, Series([0, 0, 1], order=order) * inverse)
        return _matches(pair_to_matrix(pair, len(rows)), rows)

    @staticmethod
    def _right_inverse(which, columns):
        return all(
            fibbasis.right_inverse_column(which, n, 4).coeffs[: len(expected)]
            == tuple(Fraction(c) for c in expected)
            for n, expected in columns.items()
        )


class RiordanSuite(AbstractSuite):
    """Group law of Riordan pairs on random proper pairs."""

    name = "riordan"
    covers = frozenset({"riordan.pseudo_eigen_check"})

    def _random_pair(self):
        order = self.rows - 1
        f = random_series(self.rng, order)
        g = random_series(self.rng, order) * Series.x(order)
        return make_pair(f, g)

    def checks(self):
        n = self.rows
        phi = random_rational(self.rng, nonzero=True)
        for index in range(self.samples):
            p, q, r = self._random_pair(), self._random_pair(), self._random_pair()
            yield f"product.{index}", partial(self._product, p, q, n)
            yield f"associativity.{index}", lambda p=p, q=q, r=r: pair_to_matrix((p @ q) @ r, n) == pair_to_matrix(
                p @ (q @ r), n
            )
            yield f"inverse.{index}", lambda p=p: pair_to_matrix(p @ riordan.pair_inverse(p), n) == ExactMatrix.identity(n)
            yield f"conjugation.{index}", lambda p=p: pair_to_matrix(
                riordan.conjugate_by_M(p), n
            ) == pair_to_matrix(p, n).sign_conjugate()
            c = Poly(random_rational(self.rng) for _ in range(n))
            yield f"shift.{index}", lambda c=c: riordan.shift_polynomial(riordan.shift_polynomial(c, phi), -phi) == c

        yield "pascal_group", lambda: pair_to_matrix(
            riordan.pascal_power(phi, n - 1) @ riordan.pascal_power(-phi, n - 1), n
        ) == ExactMatrix.identity(n)
        # M P^phi M = P^(-phi)
        yield "pascal_pseudo_involution", lambda: riordan.pseudo_eigen_check(
            riordan.pascal_power(phi, n - 1), -2 * phi, n, side="right"
        )

    @staticmethod
    def _product(p, q, n):
        return pair_to_matrix(p @ q, n) == pair_to_matrix(p, n) @ pair_to_matrix(q, n)


class TheoremOneSuite(AbstractSuite):
    """Identities relating the Riordan matrices of a series and its companion series."""

    name = "theorem1"
    covers = frozenset({"riordan.verify_theorem1"})

    def checks(self):
        for index in range(10 * self.samples):
            a = random_series(self.rng, self.order, constant=1)
            yield f"sample{index}", partial(riordan.verify_theorem1, a, self.order)


class PolynomialFamiliesSuite(AbstractSuite):
    """Recurrences against Riordan rows, and generating-function identities."""

    name = "polyfam"
    covers = frozenset({"polyfam.family_row_check", "polyfam.gf_identities_check"})

    def checks(self):
        beta = random_rational(self.rng, nonzero=True)
        for tag in Family:
            yield f"rows.{tag.value}", partial(self._rows, tag, beta, self.rows)
        for phi, beta in self.parameters():
            yield f"gf_identities({phi},{beta})", partial(polyfam.gf_identities_check, phi, beta, self.order)

    @staticmethod
    def _rows(tag, beta, n_max):
        return all(polyfam.family_row_check(tag, n, beta) for n in range(n_max + 1))


class RootsSuite(AbstractSuite):
    """Product forms of the polynomial families."""

    name = "roots"
    covers = frozenset({"polyfam.root_form_check"})

    def checks(self):
        beta = random_rational(self.rng, bound=5, nonzero=True)
        for tag in Family:
            yield f"{tag.value}", partial(self._roots, tag, beta, self.order, self.tol)

    @staticmethod
    def _roots(tag, beta, n_max, tol):
        return all(polyfam.root_form_check(tag, n, beta, tol) for n in range(1, n_max + 1))


class TrigonometricSuite(AbstractSuite):
    """Products of squared sines and cosines."""

    name = "trig"
    covers = frozenset({"polyfam.trig_product_check"})

    def checks(self):
        for n in range(1, self.order + 1):
            yield f"n={n}", partial(polyfam.trig_product_check, n, self.tol)


class TypeOneSuite(AbstractSuite):
    """Transformations of the first type, and powers of the Catalan series."""

    name = "type1"
    covers = frozenset(
        {
            "transforms.type1_cs_check",
            "transforms.type1_quadratic_check",
            "transforms.type1_pseudo_involution_check",
            "transforms.catalan_power_check",
        }
    )

    def checks(self):
        for phi, beta in self.parameters():
            ctx = transforms.type1_context(phi, beta, 2 * self.rows)
            label = f"({phi},{beta})"
            yield f"consistency{label}", ctx.consistency
            yield f"cs{label}", partial(self._all, transforms.type1_cs_check, ctx, self.rows)
            yield f"quadratic{label}", partial(self._all, transforms.type1_quadratic_check, ctx, self.rows)
            yield f"pseudo_involution{label}", partial(
                transforms.type1_pseudo_involution_check, ctx, self.rows
            )
        k_max = max(1, (self.order - 4) // 2)
        for k in range(-k_max, k_max + 1):
            yield f"catalan^{k}", partial(transforms.catalan_power_check, k, self.order)

    @staticmethod
    def _all(check, ctx, n_max):
        return all(check(ctx, n) for n in range(n_max + 1))


class TypeTwoSuite(AbstractSuite):
    """Transformations of the second type."""

    name = "type2"
    covers = frozenset(
        {
            "transforms.type2_tu_check",
            "transforms.type2_quadratic_check",
            "transforms.type2_parity_check",
            "transforms.type2_root_check",
            "transforms.type2_special_cases_check",
            "transforms.type2_pseudo_involution_check",
            "transforms.type2_column_split_check",
        }
    )

    def checks(self):
        for phi, beta in self.parameters():
            ctx = transforms.type2_context(phi, beta, 2 * self.rows)
            label = f"({phi},{beta})"
            yield f"consistency{label}", ctx.consistency
            for check in (
                transforms.type2_tu_check,
                transforms.type2_quadratic_check,
                transforms.type2_parity_check,
            ):
                yield f"{check.__name__}{label}", partial(TypeOneSuite._all, check, ctx, self.rows)
            yield f"roots{label}", partial(self._roots, phi, beta, self.rows, self.tol)
            yield f"pseudo_involution{label}", partial(
                transforms.type2_pseudo_involution_check, ctx, self.rows
            )
            yield f"column_split{label}", partial(transforms.type2_column_split_check, phi, beta, self.rows)
        yield "special_cases", partial(transforms.type2_special_cases_check, self.rows, 2 * self.rows)

    @staticmethod
    def _roots(phi, beta, n_max, tol):
        return all(transforms.type2_root_check(phi, beta, n, tol) for n in range(n_max + 1))


class FibonacciBasesSuite(AbstractSuite):
    """Classic Fibonacci bases: duality, rows, kernel and right inverses of B."""

    name = "fibbasis"
    covers = frozenset(
        {
            "fibbasis.duality_check",
            "fibbasis.row_formula_check",
            "fibbasis.kernel_check",
            "fibbasis.right_inverse_check",
            "fibbasis.example2_check",
            "fibbasis.golden_ratio_check",
        }
    )

    def checks(self):
        n_max = self.rows
        yield "duality.classic", partial(fibbasis.duality_check, "classic", 0, 0, n_max, max(self.order, n_max))
        yield "duality.reduced", partial(fibbasis.duality_check, "reduced", 0, 0, n_max, max(self.order, n_max))
        for kind in (BasisKind.A, BasisKind.B, BasisKind.A_RED, BasisKind.B_RED):
            yield f"rows.{kind.value}", partial(fibbasis.row_formula_check, kind, 0, 0, n_max, self.order)
        for index in range(self.samples):
            c = random_series(self.rng, 2 * self.rows)
            yield f"kernel.{index}", partial(fibbasis.kernel_check, c, 2 * self.rows)
        for which in (1, 2):
            yield f"right_inverse.{which}", partial(fibbasis.right_inverse_check, which, self.order, self.order)
        for n in range(min(n_max, 8) + 1):
            yield f"example2.{n}", partial(fibbasis.example2_check, n, self.order)
        yield "golden_ratio", partial(fibbasis.golden_ratio_check, n_max, self.tol)


class GeneralizedBasesSuite(AbstractSuite):
    """Generalized Fibonacci bases: duality, rows, group law and relations."""

    name = "generalized"
    covers = frozenset(
        {
            "fibbasis.theorem4_check",
            "fibbasis.algebraic_relations_check",
            "fibbasis.example3_check",
        }
    )

    def checks(self):
        n_max, N = self.rows, max(self.order, self.rows)
        parameters = self.parameters()
        for phi, beta in parameters:
            label = f"({phi},{beta})"
            yield f"duality{label}", partial(fibbasis.duality_check, "general", phi, beta, n_max, N)
            yield f"rows.A{label}", partial(fibbasis.row_formula_check, BasisKind.A_GEN, phi, beta, n_max, N)
            yield f"rows.B{label}", partial(fibbasis.row_formula_check, BasisKind.B_GEN, phi, beta, n_max, N)
            beta2 = random_rational(self.rng)
            yield f"theorem4{label}+{beta2}", partial(fibbasis.theorem4_check, phi, beta, beta2, 10, N)
        yield "relations", partial(fibbasis.algebraic_relations_check, n_max, parameters[:3])
        for phi, _ in parameters:
            for n in range(0, 6):
                yield f"example3({phi}).{n}", partial(fibbasis.example3_check, phi, n, N)


class SignaturesSuite(AbstractSuite):
    """Fibonacci and Lucas sequences as images of geometric series."""

    name = "signatures"
    covers = frozenset({"fibbasis.signature_check"})

    def checks(self):
        yield "signatures", partial(fibbasis.signature_check, max(10, self.rows))


def suite_registry():
    """Mapping from suite names to concrete suite classes."""
    return {cls.name: cls for cls in sorted(AbstractSuite.implementations, key=str)}


def covered_checks():
    """Union of the check operations covered by every registered suite."""
    return frozenset().union(*(cls.covers for cls in AbstractSuite.implementations))


# Functions to be passed to pmap must not be local functions
def _run_suite(name, parameters):
    return suite_registry()[name](**parameters).run()


def run_suites(names=None, parameters=None, processes=1):
    """
    Run verification suites, possibly concurrently.

    Parameters
    ----------
    names : iterable of str or None, optional
        Names of the suites to run. If None (default) or ``["all"]``, every suite is run.
    parameters : dict or None, optional
        Suite parameters, e.g. ``{"order": 16, "seed": 7}``. Unknown keys are ignored.
    processes : int, optional
        Number of processes. Output of each suite is buffered, so concurrent runs
        report in the same way as serial ones.

    Returns
    -------
    results : list of SuiteResult
        In the order of ``names``.

    Raises
    ------
    ValueError
        if a suite name is unknown.
    """
    registry = suite_registry()
    names = list(names or ["all"])
    if names == ["all"]:
        names = sorted(registry)
    unknown = [name for name in names if name not in registry]
    if unknown:
        raise ValueError(f"Unknown suites {', '.join(unknown)}; available: {', '.join(sorted(registry))}")

    parameters = dict() if parameters is None else dict(parameters)
    LOG.info("Running suites %s with %d process(es)", ", ".join(names), processes)
    results = list(
        pmap(_run_suite, names, kwargs=dict(parameters=parameters), processes=processes, ntotal=len(names))
    )
    order = {name: index for index, name in enumerate(names)}
    return sorted(results, key=lambda result: order[result.name])

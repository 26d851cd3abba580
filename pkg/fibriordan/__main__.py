# -*- coding: utf-8 -*-

import argparse
import csv
import io
import json
import logging
import sys
from multiprocessing import freeze_support

from fibriordan import __version__
from fibriordan.fibbasis import BasisKind, build_basis, coordinates_in_B
from fibriordan.fps import (
    even_odd_split,
    log_deriv_factor,
    parse_rational,
    series_deriv,
    series_from_json,
    series_inv,
    series_reversion,
    series_sqrt,
)
from fibriordan.logs import setup_logging
from fibriordan.parser import parse_series_expr
from fibriordan.polyfam import Family, family_poly, reverse_J
from fibriordan.riordan import (
    companion_b,
    euler_transform,
    make_pair,
    pair_inverse,
    pair_to_matrix,
    pascal_power,
    shift_polynomial,
)
from fibriordan.suites import run_suites, suite_registry
from fibriordan.transforms import type1_context, type1_cs, type2_context, type2_tu

LOG = logging.getLogger("fibriordan")

DESCRIPTION = """fibriordan is an exact library for truncated formal power series,
Riordan arrays, Chebyshev-type polynomial families and the Fibonacci bases.

Below are some helpful commands. """

EPILOG = """Rational parameters are given as p/q, e.g. --phi -3/4. Series are given as
expressions in x, e.g. "1/(1-x-x^2)" or "sqrt(1+4*x)"."""

SERIES_HELP = """Expand a series expression and apply an operation to it."""

MATRIX_HELP = """Emit the leading rows of a Riordan matrix."""

POLY_HELP = """Emit the coefficients of a polynomial of the Chebyshev, Dickson, Lucas or Fibonacci families."""

TRANSFORM_HELP = """Emit the polynomials (c, s) or (t, u) of the transformations of the first and second type."""

BASIS_HELP = """Fibonacci bases: emit a basis matrix, or coordinates of a series in the basis B."""

VERIFY_HELP = """Run verification suites. Exit status is 1 if any check fails."""

SERIES_OPERATIONS = {
    "eval": lambda a, args: a,
    "inv": lambda a, args: series_inv(a),
    "sqrt": lambda a, args: series_sqrt(a),
    "reversion": lambda a, args: series_reversion(a),
    "deriv": lambda a, args: series_deriv(a),
    "log-deriv": lambda a, args: log_deriv_factor(a),
    "companion": lambda a, args: companion_b(a),
    "euler": lambda a, args: euler_transform(args.phi, a),
    "split": lambda a, args: even_odd_split(a),
}


def rational(text):
    """Strict rational argument, ``p`` or ``p/q``."""
    return parse_rational(text)


# Options shared by every sub-command
common = argparse.ArgumentParser(add_help=False)
common.add_argument(
    "--format",
    choices=("json", "csv", "pretty"),
    default="pretty",
    help="Output format. Pretty is indented JSON. Default is %(default)s.",
)
common.add_argument(
    "--verbose",
    action="count",
    default=0,
    help="Log progress to standard error. Repeat for more details.",
)

parser = argparse.ArgumentParser(prog="fibriordan", description=DESCRIPTION, epilog=EPILOG)
parser.add_argument("-v", "--version", action="version", version=__version__)

subparsers = parser.add_subparsers(title="Subcommands", help="Available sub-commands", dest="subcmd")

series_parser = subparsers.add_parser("series", help=SERIES_HELP, parents=[common])
series_parser.add_argument("expression", help='Series expression, e.g. "1/(1-x)".')
series_parser.add_argument("--op", choices=tuple(SERIES_OPERATIONS), default="eval", help="Operation.")
series_parser.add_argument("--phi", type=rational, default=0, help="Parameter of the Euler transform.")
series_parser.add_argument("--order", type=int, default=16, help="Truncation order. Default is %(default)s.")

matrix_parser = subparsers.add_parser("matrix", help=MATRIX_HELP)
matrix_subparsers = matrix_parser.add_subparsers(title="Matrices", dest="matrix")
riordan_parser = matrix_subparsers.add_parser(
    "riordan", help="Riordan matrix of a pair (f, g).", parents=[common]
)
riordan_parser.add_argument("--f", required=True, help="Expression of f.")
riordan_parser.add_argument("--g", required=True, help="Expression of g, without constant term.")
riordan_parser.add_argument("--rows", type=int, default=8, help="Number of rows. Default is %(default)s.")
riordan_parser.add_argument("--inverse", action="store_true", help="Emit the inverse matrix instead.")
pascal_parser = matrix_subparsers.add_parser("pascal", help="Power of the Pascal matrix.", parents=[common])
pascal_parser.add_argument("--phi", type=rational, default=1, help="Power. Default is %(default)s.")
pascal_parser.add_argument("--rows", type=int, default=8, help="Number of rows. Default is %(default)s.")

poly_parser = subparsers.add_parser("poly", help=POLY_HELP, parents=[common])
poly_parser.add_argument("family", choices=[tag.value for tag in Family], help="Polynomial family.")
poly_parser.add_argument("n", type=int, help="Index.")
poly_parser.add_argument("--beta", type=rational, default=None, help="Parameter of the D and E families.")
poly_parser.add_argument("--shift", type=rational, default=None, help="Emit p(x + shift) instead.")
poly_parser.add_argument("--reverse", type=int, default=None, metavar="K", help="Emit x^K p(1/x) instead.")

transform_parser = subparsers.add_parser("transform", help=TRANSFORM_HELP, parents=[common])
transform_parser.add_argument("type", choices=("type1", "type2"), help="Transformation type.")
transform_parser.add_argument("--phi", type=rational, required=True)
transform_parser.add_argument("--beta", type=rational, required=True)
transform_parser.add_argument("--n", type=int, required=True, help="Index.")
transform_parser.add_argument(
    "--order", type=int, default=None, help="Order of the series computations. Default is 2n."
)

basis_parser = subparsers.add_parser("basis", help=BASIS_HELP)
basis_subparsers = basis_parser.add_subparsers(title="Operations", dest="basis")
build_parser = basis_subparsers.add_parser("build", help="Emit a basis matrix.", parents=[common])
build_parser.add_argument("--kind", choices=[kind.value for kind in BasisKind], default="A")
build_parser.add_argument("--phi", type=rational, default=0)
build_parser.add_argument("--beta", type=rational, default=0)
build_parser.add_argument("--cols", type=int, default=8, help="Number of columns. Default is %(default)s.")
build_parser.add_argument("--rows", type=int, default=None, help="Number of rows. Default is the number of columns.")
build_parser.add_argument("--order", type=int, default=16, help="Order of series columns. Default is %(default)s.")
coords_parser = basis_subparsers.add_parser(
    "coords", help="Coordinates in the basis B of a series read from standard input.", parents=[common]
)
coords_parser.add_argument("--which", type=int, choices=(1, 2), default=1, help="Right inverse of B.")
coords_parser.add_argument("--order", type=int, default=16, help="Order of the input series used.")

verify_parser = subparsers.add_parser("verify", help=VERIFY_HELP, parents=[common])
verify_parser.add_argument("names", nargs="*", default=["all"], help="Suites to run, or 'all' (default).")
verify_parser.add_argument("--order", type=int, default=16)
verify_parser.add_argument("--rows", type=int, default=12)
verify_parser.add_argument("--seed", type=int, default=7)
verify_parser.add_argument("--tol", type=float, default=1e-9)
verify_parser.add_argument("--samples", type=int, default=5)
verify_parser.add_argument("--processes", type=int, default=1, help="Suites run concurrently.")
verify_parser.add_argument("--list", action="store_true", help="List available suites and exit.")


def _series_document(a):
    return json.loads(a.to_json())


def _poly_document(p):
    return json.loads(p.to_json())


def _csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def emit(document, fmt, rows=None):
    """
    Write a document to standard output.

    Parameters
    ----------
    document : object
        JSON-serializable document.
    fmt : {"json", "csv", "pretty"}
    rows : list of lists, optional
        Tabular form of the document, used for the csv format.
    """
    if fmt == "csv":
        if rows is None:
            raise ValueError("This output is not available in the csv format")
        sys.stdout.write(_csv(rows))
    elif fmt == "json":
        sys.stdout.write(json.dumps(document) + "\n")
    else:
        sys.stdout.write(json.dumps(document, indent=2) + "\n")


def do_series(args):
    a = parse_series_expr(args.expression, args.order)
    result = SERIES_OPERATIONS[args.op](a, args)
    if args.op == "split":
        even, odd = result
        document = {"even": _series_document(even), "odd": _series_document(odd)}
        return emit(document, args.format, [document["even"]["coeffs"], document["odd"]["coeffs"]])
    document = _series_document(result)
    return emit(document, args.format, [document["coeffs"]])


def do_matrix(args):
    if args.matrix is None:
        raise ValueError("matrix requires one of 'riordan' or 'pascal'")
    if args.rows < 1:
        raise ValueError("Matrices have at least one row")
    order = args.rows - 1
    if args.matrix == "pascal":
        pair = pascal_power(args.phi, order)
    else:
        pair = make_pair(parse_series_expr(args.f, order), parse_series_expr(args.g, order))
        if args.inverse:
            pair = pair_inverse(pair)
    matrix = pair_to_matrix(pair, args.rows)
    document = json.loads(matrix.to_json())
    return emit(document, args.format, document["entries"])


def do_poly(args):
    p = family_poly(args.family, args.n, args.beta)
    if args.shift is not None:
        p = shift_polynomial(p, args.shift)
    if args.reverse is not None:
        p = reverse_J(p, args.reverse)
    document = _poly_document(p)
    return emit(document, args.format, [document])


def do_transform(args):
    if args.n < 0:
        raise ValueError("Transformations require a nonnegative index")
    order = 2 * args.n if args.order is None else args.order
    if args.type == "type1":
        first, second = type1_cs(type1_context(args.phi, args.beta, order), args.n)
        keys = ("c", "s")
    else:
        first, second = type2_tu(type2_context(args.phi, args.beta, order), args.n)
        keys = ("t", "u")
    document = {"n": args.n, keys[0]: _poly_document(first), keys[1]: _poly_document(second)}
    return emit(document, args.format, [document[keys[0]], document[keys[1]]])


def do_basis(args):
    if args.basis is None:
        raise ValueError("basis requires one of 'build' or 'coords'")
    if args.basis == "coords":
        a = series_from_json(sys.stdin.read())
        document = _series_document(coordinates_in_B(a, args.which, args.order))
        return emit(document, args.format, [document["coeffs"]])

    basis = build_basis(args.kind, args.phi, args.beta, n_cols=args.cols, N=args.order)
    matrix = basis.to_matrix(args.rows)
    document = json.loads(matrix.to_json())
    document["kind"] = basis.kind.value
    return emit(document, args.format, document["entries"])


def do_verify(args):
    if args.list:
        return emit(sorted(suite_registry()), args.format, [[name] for name in sorted(suite_registry())])

    parameters = dict(order=args.order, rows=args.rows, seed=args.seed, tol=args.tol, samples=args.samples)
    results = run_suites(args.names, parameters, processes=args.processes)
    passed = all(result.passed for result in results)

    if args.format == "pretty":
        for result in results:
            sys.stdout.write("\n".join(result.lines) + "\n")
            sys.stdout.write(f"{result.name}: {'passed' if result.passed else 'FAILED'} ({result.n_checks} checks)\n")
    else:
        document = {
            result.name: {"passed": result.passed, "checks": result.n_checks, "lines": result.lines}
            for result in results
        }
        emit(
            document,
            args.format,
            [[result.name, result.passed, result.n_checks] for result in results],
        )
    return 0 if passed else 1


COMMANDS = {
    "series": do_series,
    "matrix": do_matrix,
    "poly": do_poly,
    "transform": do_transform,
    "basis": do_basis,
    "verify": do_verify,
}


def run(argv=None):
    """
    Run the command-line interface.

    Parameters
    ----------
    argv : list of str or None, optional
        Command-line arguments. Default is ``sys.argv[1:]``.

    Returns
    -------
    status : int
        0 on success, 1 if a verification fails, 2 on usage errors and malformed input.
    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    if args.subcmd is None:
        parser.print_help(sys.stderr)
        return 2

    setup_logging(verbosity=getattr(args, "verbose", 0))
    LOG.debug("Command-line arguments: %s", args)

    try:
        status = COMMANDS[args.subcmd](args)
    except ValueError as e:
        # Parse errors, malformed JSON and precondition violations are all ValueErrors
        LOG.debug("Usage error", exc_info=True)
        sys.stderr.write(f"fibriordan: error: {e}\n")
        return 2
    return status or 0


def main():
    # This is to support frozen executables that use multiprocessing, as described here:
    #   https://docs.python.org/3/library/multiprocessing.html#multiprocessing.freeze_support
    freeze_support()
    sys.exit(run())


if __name__ == "__main__":
    main()

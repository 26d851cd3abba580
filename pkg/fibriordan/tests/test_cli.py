# -*- coding: utf-8 -*-
import io
import json
import time

import pytest

from fibriordan import __version__
from fibriordan.__main__ import run
from fibriordan.suites import suite_registry

from . import TestSuite


@pytest.fixture(autouse=True)
def no_logfile(monkeypatch, tmp_path):
    monkeypatch.setattr("fibriordan.logs.LOG_DIRECTORY", tmp_path)


def output(capsys, argv):
    """Run the command-line interface, returning the status and standard output"""
    status = run(argv)
    return status, capsys.readouterr().out


def test_version(capsys):
    """Test that the version is printed"""
    status, out = output(capsys, ["--version"])
    assert status == 0
    assert __version__ in out


def test_no_subcommand(capsys):
    """Test that a missing sub-command is a usage error"""
    assert run([]) == 2
    assert "usage" in capsys.readouterr().err


def test_riordan_matrix(capsys):
    """Test that the Riordan matrix of (1/(1+x^2), x/(1+x^2)) has the Chebyshev polynomials as rows"""
    status, out = output(
        capsys, ["matrix", "riordan", "--f", "1/(1+x^2)", "--g", "x/(1+x^2)", "--rows", "7", "--format", "json"]
    )
    assert status == 0
    document = json.loads(out)
    assert document["rows"] == document["cols"] == 7
    assert document["entries"][6] == ["-1", "0", "6", "0", "-5", "0", "1"]


def test_pascal_matrix_csv(capsys):
    """Test the CSV output of Pascal matrices"""
    status, out = output(capsys, ["matrix", "pascal", "--phi", "-1", "--rows", "3", "--format", "csv"])
    assert status == 0
    assert out == "1,0,0\n-1,1,0\n1,-2,1\n"


def test_poly(capsys):
    """Test that polynomials are emitted as lists of coefficients"""
    status, out = output(capsys, ["poly", "S", "6", "--format", "json"])
    assert status == 0
    assert json.loads(out) == ["-1", "0", "6", "0", "-5", "0", "1"]

    status, out = output(capsys, ["poly", "F", "3", "--reverse", "2", "--format", "csv"])
    assert status == 0
    assert out == "1,0,1\n"

    # C_3(x + 1) = D_3(x + 1, 1)
    status, out = output(capsys, ["poly", "C", "3", "--shift", "1", "--format", "json"])
    assert status == 0
    assert json.loads(out) == ["-2", "0", "3", "1"]


def test_poly_requires_parameter(capsys):
    """Test that Dickson polynomials without a parameter are an error"""
    assert run(["poly", "D", "3"]) == 2
    assert "fibriordan: error" in capsys.readouterr().err


def test_series(capsys):
    """Test the expansion of a series expression"""
    status, out = output(capsys, ["series", "1/(1-x-x^2)", "--order", "6", "--format", "json"])
    assert status == 0
    assert json.loads(out) == {"order": 6, "coeffs": ["1", "1", "2", "3", "5", "8", "13"]}


def test_series_operation(capsys):
    """Test operations on series"""
    status, out = output(capsys, ["series", "x-x^2", "--op", "reversion", "--order", "5", "--format", "json"])
    assert status == 0
    assert json.loads(out)["coeffs"] == ["0", "1", "1", "2", "5", "14"]

    status, out = output(capsys, ["series", "1+2*x+3*x^2", "--op", "split", "--order", "2", "--format", "json"])
    assert status == 0
    document = json.loads(out)
    assert document["even"]["coeffs"] == ["1", "3"]
    assert document["odd"]["coeffs"] == ["2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "1+"],
        ["series", "1/x"],
        ["series", "1", "--phi", "1.5"],
        ["poly", "S", "six"],
        ["matrix"],
        ["matrix", "pascal", "--rows", "0"],
        ["verify", "nonexistent"],
    ],
)
def test_usage_errors(argv):
    """Test that usage errors and malformed inputs exit with status 2"""
    assert run(argv) == 2


def test_verify_list(capsys):
    """Test the listing of verification suites"""
    assert run(["verify", "--list", "--format", "json"]) == 0
    assert "matrices" in json.loads(capsys.readouterr().out)


def test_transform(capsys):
    """Test the first decomposition at (phi, beta) = (2, 1)"""
    status, out = output(capsys, ["transform", "type1", "--phi", "2", "--beta", "1", "--n", "1", "--format", "json"])
    assert status == 0
    assert json.loads(out) == {"n": 1, "c": ["1", "2"], "s": ["1"]}


def test_basis_build(capsys):
    """Test the leading block of the basis B"""
    status, out = output(capsys, ["basis", "build", "--kind", "B", "--cols", "3", "--format", "csv"])
    assert status == 0
    assert out == "1,1,0\n0,2,1\n0,0,1\n"


def test_basis_coords(capsys, monkeypatch):
    """Test that coordinates of 1/(1 - x) through the first right inverse are 1/(1 - G)"""
    document = json.dumps({"order": 4, "coeffs": ["1"] * 5})
    monkeypatch.setattr("sys.stdin", io.StringIO(document))
    status, out = output(capsys, ["basis", "coords", "--which", "1", "--order", "4", "--format", "json"])
    assert status == 0
    coordinates = json.loads(out)
    assert coordinates["order"] == 9
    assert coordinates["coeffs"][:3] == ["1", "0", "1"]


@pytest.mark.parametrize("document", ["[1, 2]", '{"order": 0, "coeffs": [3]}', '{"order": false, "coeffs": ["1"]}'])
def test_basis_coords_malformed(monkeypatch, document):
    """Test that malformed series documents are usage errors"""
    monkeypatch.setattr("sys.stdin", io.StringIO(document))
    assert run(["basis", "coords"]) == 2


def test_verify(capsys):
    """Test that passing suites exit with status 0"""
    status, out = output(capsys, ["verify", "signatures", "matrices", "--rows", "10"])
    assert status == 0
    assert "signatures: passed" in out
    assert "matrices: passed" in out

    status, out = output(capsys, ["verify", "signatures", "--format", "json"])
    assert status == 0
    assert json.loads(out)["signatures"]["passed"]


def test_verify_every_suite(capsys):
    """Test that every library suite passes at order 16 within ten seconds"""
    names = sorted(name for name in suite_registry() if name != TestSuite.name)
    start = time.perf_counter()
    status, out = output(capsys, ["verify", *names, "--order", "16", "--seed", "7", "--format", "json"])
    assert time.perf_counter() - start < 10
    document = json.loads(out)
    assert status == 0, [line for result in document.values() for line in result["lines"] if not line.startswith("PASS")]
    assert set(document) == set(names)

# -*- coding: utf-8 -*-
import inspect

import pytest

from fibriordan import fibbasis, polyfam, riordan, transforms
from fibriordan.suites import (
    CHECK_MANIFEST,
    AbstractSuite,
    CrashedCheck,
    SuiteResult,
    covered_checks,
    error_aware,
    run_suites,
    suite_registry,
)

from . import TestSuite


def library_checks():
    """Names of the check operations defined in the library modules."""
    names = {"riordan.verify_theorem1"}
    for module in (riordan, polyfam, transforms, fibbasis):
        short = module.__name__.split(".")[-1]
        for name, func in inspect.getmembers(module, inspect.isfunction):
            if name.endswith("_check") and not name.startswith("_") and func.__module__ == module.__name__:
                names.add(f"{short}.{name}")
    return names


def test_manifest_lists_every_check():
    """Test that the manifest lists every check operation of the library"""
    assert CHECK_MANIFEST == library_checks()


def test_manifest_is_covered():
    """Test that every check operation is exercised by at least one suite"""
    assert covered_checks() == CHECK_MANIFEST


def test_registry():
    """Test that concrete suites are registered by name"""
    registry = suite_registry()
    expected = {
        "matrices",
        "riordan",
        "theorem1",
        "polyfam",
        "roots",
        "trig",
        "type1",
        "type2",
        "fibbasis",
        "generalized",
        "signatures",
        "testing",
    }
    assert expected <= set(registry)
    assert "abstract" not in registry
    assert registry["testing"] is TestSuite


def test_valid_parameters():
    """Test that suite parameters are collected from the class hierarchy"""
    assert AbstractSuite.valid_parameters == {"order", "rows", "seed", "tol", "samples"}
    assert TestSuite.valid_parameters == {"order", "rows", "seed", "tol", "samples", "test"}


def test_parameters_coercion():
    """Test that suite parameters are coerced to their types, and unknown keys ignored"""
    suite = TestSuite(order="8", test=2.0, unknown=1)
    assert suite.order == 8
    assert suite.test == 2
    assert suite.rows == 12
    assert not hasattr(suite, "unknown")

    with pytest.raises(TypeError):
        TestSuite(order="eight")


def test_random_parameters_are_reproducible():
    """Test that suites with the same seed draw the same parameters"""
    assert TestSuite(seed=3, samples=4).parameters() == TestSuite(seed=3, samples=4).parameters()
    assert len(TestSuite(samples=4).parameters()) == 4


def test_run():
    """Test that suite runs report passing, failing and crashing checks"""
    result = TestSuite().run()
    assert isinstance(result, SuiteResult)
    assert not result.passed
    assert result.n_checks == 3
    assert result.lines[0] == "PASS testing.truthy"
    assert result.lines[1] == "FAIL testing.falsy"
    assert result.lines[2].startswith("ERROR testing.crash")
    assert "ZeroDivisionError" in result.lines[2]


def test_error_aware():
    """Test that exceptions are turned into falsy outcomes, except keyboard interrupts"""

    def crash():
        raise RuntimeError("boom")

    def interrupt():
        raise KeyboardInterrupt

    outcome = error_aware(crash)()
    assert isinstance(outcome, CrashedCheck)
    assert not outcome
    assert "RuntimeError: boom" in outcome.traceback

    assert error_aware(lambda: 42)() == 42

    with pytest.raises(KeyboardInterrupt):
        error_aware(interrupt)()


def test_run_suites():
    """Test running suites serially, in the order requested"""
    results = run_suites(["signatures", "matrices"], dict(rows=10), processes=1)
    assert [result.name for result in results] == ["signatures", "matrices"]
    assert all(result.passed for result in results), [result.lines for result in results]


def test_run_suites_unknown():
    """Test that unknown suite names are rejected"""
    with pytest.raises(ValueError):
        run_suites(["nonexistent"])


@pytest.mark.parametrize("name", ["theorem1", "trig"])
def test_small_suites(name):
    """Test that small suites pass with reduced sizes"""
    (result,) = run_suites([name], dict(order=8, rows=8, samples=2))
    assert result.passed, result.lines

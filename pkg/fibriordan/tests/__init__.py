# -*- coding: utf-8 -*-
from hypothesis import strategies as st

from fibriordan import Series
from fibriordan.meta import SuiteParameter
from fibriordan.suites import AbstractSuite

# Numerators and denominators bounded by 20
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)
nonzero_rationals = rationals.filter(bool)


@st.composite
def series(draw, order, constant=None):
    """Random series through ``order``; the constant term is nonzero unless given."""
    head = draw(nonzero_rationals) if constant is None else constant
    tail = draw(st.lists(rationals, min_size=order, max_size=order))
    return Series([head] + tail, order=order)


class TestSuite(AbstractSuite):
    """Suite for testing the suite machinery"""

    # We don't want pytest to collect this class as a test
    # https://stackoverflow.com/a/63430765
    __test__ = False

    name = "testing"
    covers = frozenset()

    test = SuiteParameter("test", int, 0)

    def checks(self):
        yield "truthy", lambda: True
        yield "falsy", lambda: False
        yield "crash", lambda: 1 / 0

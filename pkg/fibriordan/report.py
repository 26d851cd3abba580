# -*- coding: utf-8 -*-
"""
Check reports
"""
from collections import OrderedDict


class CheckReport:
    """
    Outcome of a check made of several named identities.

    A report is truthy if and only if every identity holds.

    Parameters
    ----------
    name : str
        Name of the check.
    results : iterable of (str, bool), optional
        Named outcomes, in order.
    """

    def __init__(self, name, results=tuple()):
        self.name = name
        self.results = OrderedDict()
        for label, outcome in results:
            self.add(label, outcome)

    def add(self, label, outcome):
        """Record an outcome. Nested reports are flattened with dotted labels."""
        if isinstance(outcome, CheckReport):
            for sublabel, suboutcome in outcome.results.items():
                self.results[f"{label}.{sublabel}"] = suboutcome
            if not outcome.results:
                self.results[label] = True
        else:
            self.results[label] = bool(outcome)
        return self

    @property
    def passed(self):
        return all(self.results.values())

    @property
    def failures(self):
        """Labels of the identities that do not hold."""
        return [label for label, outcome in self.results.items() if not outcome]

    def __bool__(self):
        return self.passed

    def __len__(self):
        return len(self.results)

    def __repr__(self):
        status = "passed" if self.passed else f"failed ({', '.join(self.failures)})"
        return f"< CheckReport {self.name}: {len(self)} identities, {status} >"

"""Collects outcomes of tests marked ``criterion(n)`` and prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import pytest

CRITERIA = {
    1: "chimney H->VR golden vertices and ray pairs",
    2: "chimney VR->H golden facet system",
    3: "perturbed-cube initial dictionary",
    4: "perturbed-cube dictionary after two pivots",
    5: "enumeration matches brute-force oracle on random instances",
    6: "H->VR->H and V->H->V round trips",
    7: "LP optimum matches oracle; chimney unbounded",
    8: "no duplicate emissions; invariants at every pivot",
    9: "cube, octahedron, simplex, pyramid fixtures",
    10: "k-subset successor enumeration counts",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(crit, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, label in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {label}")

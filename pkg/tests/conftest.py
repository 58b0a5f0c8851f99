from __future__ import annotations

import random

import pytest

_ACCEPTANCE = {}


@pytest.fixture
def rng():
    return random.Random(20241015)


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        if report.outcome == "failed" or name not in _ACCEPTANCE:
            _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        number, _, label = name[len("test_criterion_"):].partition("_")
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(number):2d} {label.replace('_', ' ')}: {verdict}")

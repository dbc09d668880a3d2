import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from arrowpoly.fixtures import load_codes  # noqa: E402

_acceptance = []


@pytest.fixture(scope="session")
def virtual():
    return load_codes("virtual.tsv")


@pytest.fixture(scope="session")
def classical():
    return load_codes("classical.tsv")


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::", 1)[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

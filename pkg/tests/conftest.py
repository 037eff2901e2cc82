import os
import sys

import pytest

from graphsampling import load_edge_list

sys.path.insert(0, os.path.dirname(__file__))


class ScriptedRng:
    """Feeds a fixed sequence of uniforms to a sampler."""

    def __init__(self, values, seed=None):
        self.values = list(values)
        self.seed = seed
        self.calls = 0

    def random(self):
        v = self.values[self.calls]
        self.calls += 1
        return v


@pytest.fixture
def scripted_rng():
    return ScriptedRng


@pytest.fixture
def fig1_graph():
    """Star centred on 1 with leaves 2, 3, 4 plus the edge 3-4."""
    return load_edge_list(b"1 2\n1 3\n1 4\n3 4\n")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")
    config._criteria_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, text = marker.args
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        item.config._criteria_results.append((number, item.name, status, text))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_criteria_results", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    def order(r):
        num = str(r[0])
        digits = "".join(ch for ch in num if ch.isdigit())
        return int(digits), num, r[1]

    for number, name, status, text in sorted(results, key=order):
        terminalreporter.write_line(f"[{status}] criterion {number}: {text} ({name})")

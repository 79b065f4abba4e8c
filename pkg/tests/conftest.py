import os
import sys

import pytest
from hypothesis import settings

from knotcolor import corpus

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_acceptance = {}


@pytest.fixture(params=corpus.names())
def corpus_name(request):
    return request.param


@pytest.fixture
def fig8():
    return corpus.load("figure8")


@pytest.fixture
def trefoil():
    return corpus.load("trefoil")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _acceptance.get(report.nodeid)
    if marker is not None:
        number, title = marker
        _acceptance[report.nodeid] = (number, title, "PASS" if report.passed else "FAIL",
                                      report.duration)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _acceptance[item.nodeid] = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    rows = sorted((v for v in _acceptance.values() if len(v) == 4), key=lambda v: v[0])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in rows:
        terminalreporter.write_line(f"AC{number:<3} {status}  {title}  ({duration:.1f}s)")

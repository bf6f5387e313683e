import numpy as np
import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(1234))


_CRITERIA = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, args in getattr(report, "user_properties", []):
        if name == "criterion":
            _CRITERIA.append((args, report.outcome))


@pytest.fixture
def criterion(request, record_property):
    marker = request.node.get_closest_marker("criterion")
    record_property("criterion", marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, text), outcome in sorted(_CRITERIA):
        terminalreporter.write_line("criterion %d %-4s %s" % (num, "PASS" if outcome == "passed" else "FAIL", text))

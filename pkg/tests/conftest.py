import pytest

from racgmin import CoxeterPresentation
from racgmin.corpus import load

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    _criteria.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_criteria):
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] criterion {number}: {title}")


@pytest.fixture(scope="session")
def d_inf():
    return CoxeterPresentation.from_pairs(["a", "b"], [])


@pytest.fixture(scope="session")
def dd():
    return load("d_inf_x_d_inf")


@pytest.fixture(scope="session")
def dz2():
    return load("d_inf_x_z2")


@pytest.fixture(scope="session")
def pentagon():
    return load("pentagon")

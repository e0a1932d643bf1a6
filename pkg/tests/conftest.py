import logging

import pytest

from krasner.workbench import default_corpus, default_pairs

logging.getLogger("krasner").setLevel(logging.ERROR)

_CRITERIA: list[str] = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(label, text): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    label, text = marker.args
    _CRITERIA.append(f"{label} {'PASS' if rep.passed else 'FAIL'}: {text}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_CRITERIA, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def pairs(corpus):
    return default_pairs(corpus)


@pytest.fixture(scope="session")
def timed_suite(pairs):
    """The default suite report and the seconds it took."""
    import time

    from krasner.theorems import run_suite

    start = time.perf_counter()
    report = run_suite(pairs)
    return report, time.perf_counter() - start

import time
from types import SimpleNamespace

import pytest

from cuspkit import ternary

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    n, title = mark.args
    # prefer the time measured against the criterion's budget over the whole test duration
    timed = dict(item.user_properties).get("budget_seconds", rep.duration)
    _criteria[n] = (title, "PASS" if rep.passed else "FAIL", timed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status, dur = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}  ({dur:.3g} s)")


@pytest.fixture(scope="session")
def enumeration():
    t = time.perf_counter()
    e = ternary.enumerate_codes(reduce_symmetry=True)
    elapsed = time.perf_counter() - t
    return SimpleNamespace(result=e, codes=e.codes, elapsed=elapsed)

import time

import pytest
from hypothesis import settings, strategies as st

from strongclique.graph import build

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

_CRITERIA: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        number, title = marker.args
        status = "FAIL" if outcome.excinfo is not None else "PASS"
        _CRITERIA.append((number, title, status, time.perf_counter() - start))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, secs in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:2d} {status}  {title}  ({secs:.1f}s)")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [p for p, keep in zip(pairs, picks) if keep])

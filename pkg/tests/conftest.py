import pytest

from circleweights import FixedPointData

_ACCEPTANCE = {}


@pytest.fixture
def standard_data():
    # doubled (0,2,6), p = (0,1,3)
    return FixedPointData.from_points(
        [([4, 2, 1, 1], -1), ([4, 2, 3, 3], 1), ([1, 1, 3, 3], 1)]
    )


@pytest.fixture
def semi_data():
    # doubled (1,3,5), p = (1/2,3/2,5/2)
    return FixedPointData.from_points(
        [([4, 1, 1, 2], -1), ([1, 2, 3, 4], 1), ([1, 2, 2, 3], 1)]
    )


@pytest.fixture
def smallest_data():
    # doubled (0,2,4), p = (0,1,2)
    return FixedPointData.from_points(
        [([3, 1, 1, 1], -1), ([1, 1, 2, 2], 1), ([1, 3, 2, 2], 1)]
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _ACCEPTANCE[marker.args[0]] = (marker.args[1], report.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}")

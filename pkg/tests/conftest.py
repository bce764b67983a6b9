import re

import pytest

_ACCEPTANCE = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.get_closest_marker("acceptance") is not None:
            _ACCEPTANCE[item.nodeid] = None


@pytest.hookimpl(trylast=True)
def pytest_runtest_logreport(report):
    if report.nodeid not in _ACCEPTANCE:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _ACCEPTANCE[report.nodeid] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, passed in _ACCEPTANCE.items():
        name = nodeid.rsplit("::", 1)[-1]
        match = re.match(r"test_(\d+)_(.*)", name)
        label = f"{int(match.group(1)):2d} {match.group(2).replace('_', ' ')}" if match else name
        status = "not run" if passed is None else ("PASS" if passed else "FAIL")
        terminalreporter.write_line(f"criterion {label}: {status}")

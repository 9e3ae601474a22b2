import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tileforge.catalog import enumerate_bruteforce  # noqa: E402

CROSS = "121010303232"
BUTTERFLY = "1212101030303232"
DIAMOND = "12121010103030323232"
NESTED = "1012210122101" + "001010010100" + "3230032300323" + "223232232322"
DOMINO = "001223"
SQUARE = "0123"


@pytest.fixture(scope="session")
def catalog16():
    return enumerate_bruteforce(16)


@pytest.fixture(scope="session")
def catalog20():
    return enumerate_bruteforce(20)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")

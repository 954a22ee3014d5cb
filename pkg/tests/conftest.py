import re

import pytest

from weylorbit.rootdata import build_root_system

RANK2 = ["A2", "C2", "G2"]
TWO_LENGTH = ["C2", "G2", "B3", "C3", "F4"]
SMALL = ["A1", "A2", "A3", "B3", "C2", "C3", "D4", "G2"]


@pytest.fixture
def C2():
    return build_root_system("C2")


@pytest.fixture
def G2():
    return build_root_system("G2")


_CRITERIA: dict[int, list] = {}


# one PASS/FAIL line per acceptance criterion, keyed on test_criterion_<n>_ names
def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"::test_criterion_(\d+)_", report.nodeid)
    if m:
        _CRITERIA.setdefault(int(m.group(1)), []).append((report.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        runs = _CRITERIA[n]
        ok = all(p for _, p in runs)
        failed = [nid.split("::")[-1] for nid, p in runs if not p]
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {len(runs)} test(s)"
        if failed:
            line += " failed: " + ", ".join(failed)
        terminalreporter.write_line(line)

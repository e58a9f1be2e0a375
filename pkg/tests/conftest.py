import re
from collections import defaultdict

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.failed:
        _outcomes[int(m.group(1))].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        status = "PASS" if all(_outcomes[k]) else "FAIL"
        terminalreporter.write_line(f"criterion {k:02d}: {status}")

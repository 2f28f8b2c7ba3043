"""Per-criterion PASS/FAIL summary for the acceptance module."""
import re
from collections import defaultdict

CRITERIA = {
    1: "golden h-polynomial tables",
    2: "flag route agreement (labeling, rank selection, multisets)",
    3: "pyramid/prism operator agreement",
    4: "Eulerian identities",
    5: "certification suite",
    6: "zonotope and second subdivision identities",
    7: "property suites",
}

_outcomes = defaultdict(list)
_PATTERN = re.compile(r"test_acceptance\.py::test_c(\d+)_")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[int(m.group(1))].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k, title in CRITERIA.items():
        runs = _outcomes.get(k)
        if not runs:
            terminalreporter.write_line(f"criterion {k} ({title}): NOT RUN")
            continue
        status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(
            f"criterion {k} ({title}): {status} [{sum(runs)}/{len(runs)} checks]")

from collections import defaultdict

import pytest

CRITERIA = {
    1: "Hilbert-Serre series vs component oracle",
    2: "pole order = GSOP size = Samuel degree",
    3: "Koszul multiplicity = Samuel multiplicity (and padding gives 0)",
    4: "degree = e / product of parameter degrees, across GSOPs",
    5: "Euler-Poincare series identity",
    6: "degree and multiplicity sum decompositions",
    7: "worked micro-example against frozen values",
    8: "structural suite",
}

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        n = getattr(report, "criterion", None)
        if n is not None:
            _outcomes[n].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            terminalreporter.write_line(f"criterion {n}: NOT RUN  {title}")
            continue
        ok = all(r == "passed" for r in results)
        status = "PASS" if ok else "FAIL"
        passed = sum(r == "passed" for r in results)
        terminalreporter.write_line(f"criterion {n}: {status}  {title} ({passed}/{len(results)} checks)")

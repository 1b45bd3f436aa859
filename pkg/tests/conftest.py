import pytest

from phorma import PhormaSpec, build

B_L = (
    "a1>=a3 & a2>=a4 & a1>=a2 & (a1!=a2 | a3>=a4) "
    "& (a1!=a3 | a2=a4) & (a2!=a4 | a1=a3)"
)

# (label, bounds, restriction) for the exhaustive suites
TEST_PHORMAS = [
    ("P2sim-2x2", (2, 2), "a1>=a2"),
    ("P2sim-3x5", (3, 5), "a1>=a2"),
    ("P2sim-6x6", (6, 6), "a1>=a2"),
    ("P3sim-345", (3, 4, 5), "a1>=a2 | a2>=a3"),
    ("P3swap-345", (3, 4, 5), "a1>=a2"),
    ("PL-3333", (3, 3, 3, 3), B_L),
    ("PL-7575", (7, 5, 7, 5), B_L),
]


@pytest.fixture(scope="session")
def graph_7575():
    return build(PhormaSpec.from_text((7, 5, 7, 5), B_L))


@pytest.fixture(scope="session")
def graph_235():
    """One pattern class whose entry point is (2, 3, 5)."""
    return build(PhormaSpec.from_text((2, 3, 5), "a1<a2 & a2<a3"))


@pytest.fixture(scope="session", params=TEST_PHORMAS, ids=[p[0] for p in TEST_PHORMAS])
def any_graph(request):
    _, a, where = request.param
    return build(PhormaSpec.from_text(a, where))


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.failed and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], "error"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")

import pytest
from hypothesis import settings

settings.register_profile("loopspec", deadline=None, max_examples=100)
settings.load_profile("loopspec")

EXAMPLE6_ADJ = (
    (0, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 1),
    (0, 1, 1, 1, 0, 0),
    (0, 0, 1, 0, 1, 1),
    (0, 0, 0, 1, 0, 1),
    (0, 1, 0, 1, 1, 0),
)

EXAMPLE6_WALK = (
    (1, 1, 3, 7, 20, 52),
    (1, 3, 7, 20, 52, 146),
    (1, 3, 9, 24, 67, 180),
    (1, 3, 8, 23, 61, 170),
    (1, 2, 6, 16, 44, 120),
    (1, 3, 8, 21, 59, 157),
)


def pytest_addoption(parser):
    parser.addoption("--long-running", action="store_true", default=False,
                     help="run the n = 6 exhaustive sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-running"):
        return
    skip = pytest.mark.skip(reason="needs --long-running")
    for item in items:
        if "long_running" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def example6():
    return EXAMPLE6_ADJ


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        tag = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(outcome, outcome)
        terminalreporter.write_line(f"[{tag}] {name}")

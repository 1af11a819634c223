import pytest


@pytest.fixture
def fresh_guards():
    from permorder import core

    saved = dict(core.GUARDS)
    yield core.GUARDS
    core.GUARDS.clear()
    core.GUARDS.update(saved)


_acceptance: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance.append((name, "PASS" if report.passed else "FAIL", f"{report.duration:.2f}s"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, took in _acceptance:
        terminalreporter.write_line(f"{outcome}  {name}  ({took})")

import pytest

from qbalg import fixture


@pytest.fixture(scope="session")
def ex1():
    return fixture("example1")


@pytest.fixture(scope="session")
def ex2():
    return fixture("example2")


@pytest.fixture(scope="session")
def ex3():
    return fixture("example3")


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, label, note = ACCEPTANCE[k]
        terminalreporter.write_line(
            f"criterion {k}: {'PASS' if ok else 'FAIL'}  {label}" + (f"  ({note})" if note else ""))

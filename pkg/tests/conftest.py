import pytest

from smcstrict.core import default_signature, make_signature, standard_signature


@pytest.fixture
def std():
    return standard_signature()


@pytest.fixture
def small():
    return default_signature()


@pytest.fixture
def two_obj():
    return make_signature("a b", {"f": ("a", "b")})


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])

import pytest

from hermdec.code import Code
from hermdec.field import build_field
from hermdec.mapping import build_mapping


@pytest.fixture(scope="session")
def gf4():
    return build_field(1)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2)


@pytest.fixture(scope="session")
def code2():
    return Code(2, 4)


@pytest.fixture(scope="session")
def code4():
    return Code(4, 16)


@pytest.fixture(scope="session")
def ms2(code2):
    return build_mapping(code2.ctx, code2.y0)


@pytest.fixture(scope="session")
def ms4(code4):
    return build_mapping(code4.ctx, code4.y0)


@pytest.fixture(scope="session")
def codebook2(code2):
    from hermdec.oracle import iter_codebook
    return list(iter_codebook(code2))


# One line per acceptance criterion, appended by tests/test_acceptance.py and
# echoed after the run so the verdicts survive output capture.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import warnings

import pytest

from fano_hilbert.families import OutsideClassificationWarning

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def quiet_classification():
    """Silence warnings about parameters outside the classified range."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideClassificationWarning)
        yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from spinab.model import RingConfig, validate  # noqa: E402


@pytest.fixture
def ring():
    """Default ring with no spin-orbit field."""
    return validate(RingConfig(so_field=0.0))


@pytest.fixture
def so_ring():
    return validate(RingConfig(g_factor=20.0, so_field=0.5))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

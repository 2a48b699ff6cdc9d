import pytest

from landau_oam.fock import build_operator_set, interior_projector
from landau_oam.model import DEFAULT_CONFIG, make_config
from landau_oam.wavefunction import QuadratureRule

# (criterion, passed, detail) lines filled in by test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def config():
    return DEFAULT_CONFIG


@pytest.fixture(scope="session")
def odd_config():
    """Non-unit parameters so that omega, l_B and eB all differ from 1."""
    return make_config(3.0, 0.7, 2.0)


@pytest.fixture(scope="session")
def rule():
    return QuadratureRule()


@pytest.fixture(scope="session")
def ops(config):
    return build_operator_set(config, 20)


@pytest.fixture(scope="session")
def odd_ops(odd_config):
    return build_operator_set(odd_config, 20)


@pytest.fixture(scope="session")
def projector():
    return interior_projector(20, 4)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")

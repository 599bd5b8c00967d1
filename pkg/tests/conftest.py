import pytest
from hypothesis import settings

from factorapprox import Precision, SolverConfig

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture(scope="session")
def prec():
    return Precision(256)


@pytest.fixture(scope="session")
def ctx(prec):
    return prec.context()


@pytest.fixture(scope="session")
def cfg(prec):
    return SolverConfig(precision=prec)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])

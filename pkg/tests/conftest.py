import pytest

from resolvalg.config import RunConfig
from resolvalg.symplectic import SympSpace


@pytest.fixture
def space2() -> SympSpace:
    return SympSpace(2)


@pytest.fixture
def space4() -> SympSpace:
    return SympSpace(4)


@pytest.fixture
def cfg() -> RunConfig:
    return RunConfig()


@pytest.fixture
def fast_cfg() -> RunConfig:
    # trimmed schedule for unit tests that only need decay direction
    return RunConfig(schedule=(8, 16))

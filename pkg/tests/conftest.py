# tests/conftest.py

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the n = 10, 11 oracle tier")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def golden_sigma():
    """The 6-colored 16-cycle used as the worked example of the bijection chain."""
    from coalescence.core.permutations import Permutation

    return Permutation.from_cycle_order((1, 14, 12, 13, 6, 7, 10, 11, 15, 9, 8, 16, 4, 5, 2, 3))


@pytest.fixture
def golden_colors():
    return (2, 3, 3, 2, 6, 3, 1, 1, 1, 1, 6, 5, 4, 3, 5, 1)

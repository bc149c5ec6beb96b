import numpy as np
import pytest

from schrodlab import coulomb, radial_grid, solve_radial


@pytest.fixture(scope="session")
def hydrogen():
    """The two lowest s states of hydrogen on the default radial grid."""
    return solve_radial(coulomb(), 0, 2, radial_grid())


@pytest.fixture(scope="session")
def rgrid():
    return radial_grid()


@pytest.fixture
def rng():
    return np.random.default_rng(7)

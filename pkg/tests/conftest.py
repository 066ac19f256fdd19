import numpy as np
import pytest

from adiasearch.dynamics import simulate
from adiasearch.schedules import ScheduleKind
from adiasearch.spectral import SearchInstance


@pytest.fixture(scope="session")
def n8_proposed_002():
    """Shared proposed-schedule trajectory at n=8, eps=0.02 (the costly run)."""
    return simulate(ScheduleKind.PROPOSED, SearchInstance(n=8, eps=0.02), grid_points=2001)


@pytest.fixture(scope="session")
def n8_original_002():
    return simulate(ScheduleKind.ORIGINAL, SearchInstance(n=8, eps=0.02), grid_points=2001)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260811)

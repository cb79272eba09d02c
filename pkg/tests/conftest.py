from __future__ import annotations

import os
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("srforge", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("srforge")

from srforge import GF  # noqa: E402


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


@pytest.fixture(scope="session")
def gf7():
    return GF(7)


@pytest.fixture(scope="session")
def gf125():
    return GF(5, "x^3+3x+3")


@pytest.fixture(scope="session")
def gf2197():
    return GF(13, "x^3+11x+6")

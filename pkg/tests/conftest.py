"""
Pytest configuration and fixtures.

This file is automatically loaded by pytest and provides shared fixtures
for all tests in the project.
"""

import os
from collections.abc import Generator

import mpmath
import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# Keep a developer's CUTLEG_* environment out of the tests
for key in [k for k in os.environ if k.startswith("CUTLEG_")]:
    del os.environ[key]

from src.core.config import reset_settings

RNG_SEED = 20240601

# Property tests share the autouse settings reset; special-function
# evaluations are too uneven in cost for a per-example deadline.
settings.register_profile(
    "cutleg",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)
settings.load_profile("cutleg")


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Every test starts from default settings and leaves none installed."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for random parameter samples."""
    return np.random.default_rng(RNG_SEED)


@pytest.fixture
def mp() -> Generator[mpmath.ctx_mp.MPContext, None, None]:
    """mpmath at 30 digits as the reference implementation."""
    saved = mpmath.mp.dps
    mpmath.mp.dps = 30
    yield mpmath.mp
    mpmath.mp.dps = saved


@pytest.fixture
def config_file(tmp_path) -> str:
    """A key=value settings file with a comment and a blank line."""
    path = tmp_path / "cutleg.conf"
    path.write_text("# tighter quadrature\nquad_tol = 1e-11\n\nSERIES_EXCLUSION=0.1\n")
    return str(path)

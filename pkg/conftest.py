"""
Shared pytest fixtures.

Adds src to the Python path the way the launch script does.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent / "src"))

from core.catalog import find_action  # noqa: E402


RHO1 = "rho1_SO3_SU3_SO3"
SO6 = "SO6_SU6_Sp3"
RHO4 = "rho4_U4_SO8_U4"
RHO8 = "rho8_Sp2_Sp2Sp2_Sp2"


@pytest.fixture
def rho1():
    return find_action(RHO1)


@pytest.fixture
def so6():
    return find_action(SO6)

"""
Shared fixtures for the framewigner test suite
"""
import os
import sys

import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from framewigner.config import config_manager  # noqa: E402
from framewigner.frames import standard_frame  # noqa: E402
from framewigner.opframes import build_hermitian_frame, build_operator_frame  # noqa: E402


@pytest.fixture(autouse=True)
def default_numerics():
    """Tests run against the built-in tolerances, whatever framewigner.json says"""
    saved = config_manager.config["numerics"]
    config_manager.config["numerics"] = type(saved)()
    yield
    config_manager.config["numerics"] = saved


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def triangle():
    return standard_frame("polygon", 3)


@pytest.fixture
def tetrahedron():
    return standard_frame("tetrahedron")


@pytest.fixture
def icosahedron():
    return standard_frame("icosahedron")


@pytest.fixture
def W_triangle(triangle):
    return build_hermitian_frame(triangle)


@pytest.fixture
def W_tetrahedron(tetrahedron):
    return build_hermitian_frame(tetrahedron)


@pytest.fixture
def V_triangle(triangle):
    return build_operator_frame(triangle)

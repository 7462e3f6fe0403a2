"""
共享的测试夹具
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.cartan import build_datum
from src.quivers import DynkinQuiver, linear_quiver
from src.tcartan import inverse_via_eta
from src.torus import QuantumTorus


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 全秩扫描，默认运行时可用 -m 'not slow' 跳过")


@pytest.fixture(scope="session")
def b3():
    return build_datum("B3")


@pytest.fixture(scope="session")
def g2():
    return build_datum("G2")


@pytest.fixture(scope="session")
def f4():
    return build_datum("F4")


@pytest.fixture(scope="session")
def b3_quiver(b3):
    """ξ = (3, 2, 1)，即线性箭图"""
    return DynkinQuiver(b3, (3, 2, 1))


@pytest.fixture(scope="session")
def g2_quiver(g2):
    return DynkinQuiver(g2, (1, 2))


@pytest.fixture(scope="session")
def f4_quiver(f4):
    return DynkinQuiver(f4, (4, 3, 2, 1))


@pytest.fixture(scope="session")
def b3_table(b3):
    return inverse_via_eta(linear_quiver(b3))


@pytest.fixture(scope="session")
def b3_torus(b3_quiver, b3_table):
    return QuantumTorus(b3_quiver, b3_table)

"""
Cartan数据模块
有限型Cartan数据、格向量与双线性型
"""

from .datum import CartanDatum, CartanType, RANK_RULES, build_datum
from .lattice import (
    Basis,
    LatticeVec,
    bilinear,
    fundamental_weight,
    pairing,
    rational_root_coords,
    simple_reflection,
    simple_root,
    to_root_basis,
    to_weight_basis,
)

__all__ = [
    "CartanDatum",
    "CartanType",
    "RANK_RULES",
    "build_datum",
    "Basis",
    "LatticeVec",
    "bilinear",
    "fundamental_weight",
    "pairing",
    "rational_root_coords",
    "simple_reflection",
    "simple_root",
    "to_root_basis",
    "to_weight_basis",
]

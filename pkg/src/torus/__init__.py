"""
量子环面模块
N 型、正规序单项式、bar 对合、B̃ 单项式与交换性定理
"""

from .checks import (
    calN_failure,
    check_nnkr,
    nnkr_cases,
    nnkr_failure,
    nnkr_rhs,
    ya_alpha,
    ya_beta,
    ya_failure,
)
from .literal import format_element, format_monomial, parse_element
from .monomial import TorusElement, TorusMonomial, normal_key
from .nform import NForm, n_via_roots
from .torus import QuantumTorus

__all__ = [
    "calN_failure",
    "check_nnkr",
    "nnkr_cases",
    "nnkr_failure",
    "nnkr_rhs",
    "ya_alpha",
    "ya_beta",
    "ya_failure",
    "format_element",
    "format_monomial",
    "parse_element",
    "TorusElement",
    "TorusMonomial",
    "normal_key",
    "NForm",
    "n_via_roots",
    "QuantumTorus",
]

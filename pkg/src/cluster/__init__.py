"""
相容对模块
下标序列上的 (Λ, B̃)、Γ 坐标形式、Λ^{[Q]} 与环面同构
"""

from .pairs import (
    GammaForms,
    LambdaQ,
    PairMatrices,
    RootData,
    alpha_plus_minus,
    alpha_plus_minus_failure,
    check_compatible,
    check_conjecture,
    check_torus_iso,
    check_transposed,
    commutation_invariance_failure,
    compatible_failure,
    exchange_matrix,
    gamma_forms,
    gamma_forms_failure,
    lambda_by_roots,
    lambda_matrix,
    lambda_Q,
    lambda_Q_failure,
    pair_matrices,
    prefixes_failure,
    prefix_weights,
    satisfies_length_condition,
    skew_symmetrizer_failure,
    torus_iso_failure,
)
from .sequence import SequenceIndex, sequence_index

__all__ = [
    "GammaForms",
    "LambdaQ",
    "PairMatrices",
    "RootData",
    "alpha_plus_minus",
    "alpha_plus_minus_failure",
    "check_compatible",
    "check_conjecture",
    "check_torus_iso",
    "check_transposed",
    "commutation_invariance_failure",
    "compatible_failure",
    "exchange_matrix",
    "gamma_forms",
    "gamma_forms_failure",
    "lambda_by_roots",
    "lambda_matrix",
    "lambda_Q",
    "lambda_Q_failure",
    "pair_matrices",
    "prefixes_failure",
    "prefix_weights",
    "satisfies_length_condition",
    "skew_symmetrizer_failure",
    "torus_iso_failure",
    "SequenceIndex",
    "sequence_index",
]

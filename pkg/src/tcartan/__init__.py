"""
t-量子化Cartan矩阵模块
Laurent多项式、(q,t)-Cartan矩阵、逆矩阵的三种计算方法与已发表表格
"""

from .closed_forms import CLOSED_FAMILIES, closed_formula
from .eta import eta, inverse_via_eta
from .golden import ERRATA, GOLDEN_TYPES, golden_table, published_tables
from .laurent import LaurentPoly
from .matrices import (
    b_matrix,
    bbar_matrix,
    q,
    qt_cartan,
    quantum_cartan,
    t,
    t_cartan,
    to_sympy_matrix,
)
from .properties import (
    eta_extension_failure,
    independence_failure,
    series_failure,
    structure_failure,
)
from .series import inverse_via_rational, inverse_via_series
from .table import TildeBTable

__all__ = [
    "CLOSED_FAMILIES",
    "closed_formula",
    "eta",
    "inverse_via_eta",
    "ERRATA",
    "GOLDEN_TYPES",
    "golden_table",
    "published_tables",
    "LaurentPoly",
    "b_matrix",
    "bbar_matrix",
    "q",
    "qt_cartan",
    "quantum_cartan",
    "t",
    "t_cartan",
    "to_sympy_matrix",
    "eta_extension_failure",
    "independence_failure",
    "series_failure",
    "structure_failure",
    "inverse_via_rational",
    "inverse_via_series",
    "TildeBTable",
]

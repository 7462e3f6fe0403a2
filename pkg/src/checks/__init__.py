"""
验证套件模块
每个套件把一组性质在一组类型与箭图上逐例检验
"""

from typing import Dict, Type

from .base_check import (
    ALL_SMALL_TYPES,
    MEDIUM_TYPES,
    SMALL_TYPES,
    BaseCheck,
    VerifyCase,
    VerifyContext,
    types_up_to,
)
from .pair_checks import CompatibleCheck, TorusIsoCheck, commutation_readings
from .quiver_checks import AdditiveCheck, BijectionCheck, CensusCheck, QuiverIsoCheck
from .table_checks import (
    ClosedFormulasCheck,
    IndependenceCheck,
    SeriesCheck,
    StructureCheck,
    TablesCheck,
)
from .torus_checks import CalNCheck, NnKRCheck, YACheck

# 套件名 -> 实现类，顺序即 "all" 的运行顺序
SUITES: Dict[str, Type[BaseCheck]] = {
    check.suite: check
    for check in (
        TablesCheck,
        ClosedFormulasCheck,
        SeriesCheck,
        IndependenceCheck,
        StructureCheck,
        AdditiveCheck,
        BijectionCheck,
        QuiverIsoCheck,
        CalNCheck,
        NnKRCheck,
        YACheck,
        CompatibleCheck,
        TorusIsoCheck,
        CensusCheck,
    )
}

__all__ = [
    "SUITES",
    "ALL_SMALL_TYPES",
    "MEDIUM_TYPES",
    "SMALL_TYPES",
    "BaseCheck",
    "VerifyCase",
    "VerifyContext",
    "types_up_to",
    "CompatibleCheck",
    "TorusIsoCheck",
    "commutation_readings",
    "AdditiveCheck",
    "BijectionCheck",
    "CensusCheck",
    "QuiverIsoCheck",
    "ClosedFormulasCheck",
    "IndependenceCheck",
    "SeriesCheck",
    "StructureCheck",
    "TablesCheck",
    "CalNCheck",
    "NnKRCheck",
    "YACheck",
]

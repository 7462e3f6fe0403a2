"""
Dynkin箭图模块
高度函数、φ_Q、AR箭图、适配序列与组合性质
"""

from .ar_quiver import (
    ARQuiver,
    RepVertex,
    ar_quiver,
    ar_vertices,
    reading_key,
    repetition_quiver,
    window_vertices,
)
from .dynkin_quiver import (
    HEIGHT_PRESETS,
    DynkinQuiver,
    linear_quiver,
    parse_height,
    quiver_from_orientation,
    random_quiver,
    sink_source_quiver,
)
from .properties import (
    MAX_CENSUS_RANK,
    CensusResult,
    additive_failure,
    bijection_failure,
    census,
    check_additive,
    check_reflection_functoriality,
    class_census,
    functoriality_failure,
    quiver_iso_failure,
)
from .readings import (
    adapted_positions,
    compatible_reading,
    first_non_adapted,
    is_adapted,
    longest_word,
    random_adapted_word,
    reading_word,
    source_cycle_word,
)

__all__ = [
    "ARQuiver",
    "RepVertex",
    "ar_quiver",
    "ar_vertices",
    "reading_key",
    "repetition_quiver",
    "window_vertices",
    "HEIGHT_PRESETS",
    "DynkinQuiver",
    "linear_quiver",
    "parse_height",
    "quiver_from_orientation",
    "random_quiver",
    "sink_source_quiver",
    "MAX_CENSUS_RANK",
    "CensusResult",
    "additive_failure",
    "bijection_failure",
    "census",
    "check_additive",
    "check_reflection_functoriality",
    "class_census",
    "functoriality_failure",
    "quiver_iso_failure",
    "adapted_positions",
    "compatible_reading",
    "first_non_adapted",
    "is_adapted",
    "longest_word",
    "random_adapted_word",
    "reading_word",
    "source_cycle_word",
]

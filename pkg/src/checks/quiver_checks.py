"""
Dynkin箭图与 φ_Q 的验证套件
"""

from typing import List, Optional, Tuple

from ..cartan import CartanType, build_datum
from ..quivers import (
    MAX_CENSUS_RANK,
    additive_failure,
    bijection_failure,
    census,
    functoriality_failure,
    quiver_iso_failure,
)
from ..weyl import positive_roots
from .base_check import ALL_SMALL_TYPES, BaseCheck, VerifyCase, types_up_to


class _PerQuiverCheck(BaseCheck):
    """每个 (类型, 箭图) 一个用例"""

    default_types = ALL_SMALL_TYPES

    def cases(self) -> List[VerifyCase]:
        cases = []
        for name in self.context.types(self.default_types):
            datum = build_datum(name)
            for quiver in self.context.quivers(datum):
                cases.append(VerifyCase(self.suite, str(datum.ctype), xi=quiver.xi))
        return cases


class AdditiveCheck(_PerQuiverCheck):
    """τ^l γ_i 的加性性质"""

    suite = "additive"
    description = "additive property for every tested quiver"

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        quiver = case.quiver
        datum = quiver.datum
        failure = additive_failure(quiver)
        checked = datum.rank * (datum.h + 1)
        if failure:
            i, l = failure
            return checked, f"加性性质在 i = {i}, l = {l} 处不成立"
        return checked, None


class BijectionCheck(_PerQuiverCheck):
    """φ_Q 的双射与值域、平移规则、源点反射函子性"""

    suite = "bijection"
    description = "phi bijection and range, shift rule, reflection functoriality"

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        quiver = case.quiver
        datum = quiver.datum
        factor = self.context.config.window_factor
        checked = datum.rank * (factor * datum.h + 1)
        failure = bijection_failure(quiver, factor)
        if failure:
            return checked, failure
        lo, hi = self.context.window_for(quiver)
        for i in quiver.sources():
            checked += datum.rank * ((hi - lo) // 2 + 1)
            failure = functoriality_failure(quiver, i, lo, hi)
            if failure:
                return checked, failure
        return checked, None


class QuiverIsoCheck(_PerQuiverCheck):
    """Γ_Q 与相容读法的Hasse箭图相同"""

    suite = "quiver-iso"
    description = "Gamma_Q equals the Hasse quiver of its compatible reading"

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        quiver = case.quiver
        return len(positive_roots(quiver.datum)), quiver_iso_failure(quiver)


class CensusCheck(BaseCheck):
    """2^{n-1} 个交换类，且同类高度函数只差常数"""

    suite = "census"
    description = "commutation-class census and rigidity"

    def cases(self) -> List[VerifyCase]:
        names = self.context.types(types_up_to(MAX_CENSUS_RANK, ("E6", "F4", "G2")))
        kept = [name for name in names if CartanType.parse(name).rank <= MAX_CENSUS_RANK]
        for name in names:
            if name not in kept:
                self.log_info(f"{name} 的秩超过 {MAX_CENSUS_RANK}，跳过")
        return [VerifyCase(self.suite, name) for name in kept]

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        result = census(case.datum)
        if result.classes != result.orientations:
            return result.orientations, f"得到 {result.classes} 个交换类，期望 {result.orientations}"
        if not result.rigid:
            return result.orientations, "同一交换类中存在不只差常数的高度函数"
        return result.orientations, None

"""
δ̃ 系数表相关的验证套件
"""

from typing import List, Optional, Tuple

from ..quivers import linear_quiver
from ..tcartan import (
    CLOSED_FAMILIES,
    GOLDEN_TYPES,
    closed_formula,
    eta_extension_failure,
    golden_table,
    independence_failure,
    inverse_via_eta,
    inverse_via_rational,
    inverse_via_series,
    series_failure,
    structure_failure,
)
from .base_check import ALL_SMALL_TYPES, BaseCheck, VerifyCase


class TablesCheck(BaseCheck):
    """已发表表格与 η 计算逐项比较"""

    suite = "tables"
    description = "golden tables vs inverse_via_eta"

    def cases(self) -> List[VerifyCase]:
        names = self.context.types(GOLDEN_TYPES)
        skipped = [name for name in names if name not in GOLDEN_TYPES]
        for name in skipped:
            self.log_info(f"{name} 没有已发表表格，跳过")
        return [VerifyCase(self.suite, name) for name in names if name in GOLDEN_TYPES]

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        golden = golden_table(case.type_name)
        computed = inverse_via_eta(linear_quiver(case.datum))
        for pair in golden.pairs():
            if golden.coefficients(*pair) != computed.coefficients(*pair):
                return len(golden.pairs()), (
                    f"δ̃_{pair}: 表中为 {golden.coefficients(*pair)}，计算得 {computed.coefficients(*pair)}"
                )
        return len(golden.pairs()), None


class ClosedFormulasCheck(BaseCheck):
    """A、B、C、D 型闭公式"""

    suite = "closed-formulas"
    description = "closed formulas vs inverse_via_eta"

    def cases(self) -> List[VerifyCase]:
        defaults = [f"{family}{n}" for family in CLOSED_FAMILIES for n in range(1, 11)]
        defaults = [name for name in defaults if name[0] not in "BC" or int(name[1:]) >= 2]
        defaults = [name for name in defaults if name[0] != "D" or int(name[1:]) >= 4]
        names = self.context.types(defaults)
        return [VerifyCase(self.suite, name) for name in names if name[0] in CLOSED_FAMILIES]

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        datum = case.datum
        table = inverse_via_eta(linear_quiver(datum))
        for i in datum.I:
            for j in datum.I:
                formula = closed_formula(datum.ctype, i, j)
                if formula != table.delta_poly(i, j):
                    return datum.rank ** 2, f"δ̃_{i},{j}: 闭公式 {formula}，η 给出 {table.delta_poly(i, j)}"
        return datum.rank ** 2, None


class SeriesCheck(BaseCheck):
    """逐阶级数求逆与 tfb 延拓一致；秩 ≤ 4 时再与有理函数求逆比较"""

    suite = "series"
    description = "series inversion vs tfb extension"

    def cases(self) -> List[VerifyCase]:
        return [VerifyCase(self.suite, name) for name in self.context.types(ALL_SMALL_TYPES)]

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        datum = case.datum
        degree = self.context.config.series_factor * datum.h
        table = inverse_via_eta(linear_quiver(datum))
        checked = datum.rank ** 2 * (degree + 1)
        failure = series_failure(table, inverse_via_series(datum, degree))
        if failure is None and datum.rank <= 4:
            rational = inverse_via_rational(datum)
            for pair, coefficients in sorted(rational.items()):
                checked += 1
                if coefficients != table.coefficients(*pair):
                    return checked, f"有理函数求逆 δ̃_{pair} = {coefficients}"
        return checked, failure


class IndependenceCheck(BaseCheck):
    """不同箭图给出相同的 η 表"""

    suite = "independence"
    description = "eta tables identical across quivers"

    def cases(self) -> List[VerifyCase]:
        return [VerifyCase(self.suite, name) for name in self.context.types(ALL_SMALL_TYPES)]

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        datum = case.datum
        quivers = self.context.quivers(datum, count=max(10, self.context.config.random_quivers))
        if self.context.height:
            quivers.append(linear_quiver(datum))
        return len(quivers) * datum.rank ** 2 * datum.h, independence_failure(quivers)


class StructureCheck(BaseCheck):
    """δ̃ 的结构性质，以及 η 在 |u| ≤ 2h 上的延拓"""

    suite = "structure"
    description = "structural identities and theta recurrence"

    def cases(self) -> List[VerifyCase]:
        return [VerifyCase(self.suite, name) for name in self.context.types(ALL_SMALL_TYPES)]

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        datum = case.datum
        table = inverse_via_eta(linear_quiver(datum))
        checked = datum.rank ** 2 * (4 * datum.h + 1)
        failure = structure_failure(table)
        if failure:
            return checked, failure
        for quiver in self.context.quivers(datum):
            checked += datum.rank ** 2 * (4 * datum.h + 1)
            failure = eta_extension_failure(table, quiver)
            if failure:
                return checked, failure
        return checked, None

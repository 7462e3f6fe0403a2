"""
量子环面的验证套件
"""

from typing import Dict, List, Optional, Tuple

from ..cartan import build_datum
from ..quivers import DynkinQuiver, linear_quiver, window_vertices
from ..tcartan import TildeBTable, inverse_via_eta
from ..torus import QuantumTorus, calN_failure, nnkr_cases, nnkr_failure, ya_failure
from .base_check import MEDIUM_TYPES, SMALL_TYPES, BaseCheck, VerifyCase


class _TorusCheck(BaseCheck):
    """每个 (类型, 箭图, 窗口) 一个用例，同一类型共享 δ̃ 表"""

    default_types = MEDIUM_TYPES

    def __init__(self, context, check_name: str = ""):
        super().__init__(context, check_name)
        self._tables: Dict[str, TildeBTable] = {}

    def window(self, quiver: DynkinQuiver) -> Tuple[int, int]:
        return self.context.window_for(quiver)

    def cases(self) -> List[VerifyCase]:
        cases = []
        for name in self.context.types(self.default_types):
            datum = build_datum(name)
            for quiver in self.context.quivers(datum):
                cases.append(
                    VerifyCase(self.suite, str(datum.ctype), xi=quiver.xi, window=self.window(quiver))
                )
        return cases

    def torus(self, case: VerifyCase) -> QuantumTorus:
        if case.type_name not in self._tables:
            self._tables[case.type_name] = inverse_via_eta(linear_quiver(case.datum))
        return QuantumTorus(case.quiver, self._tables[case.type_name])


class CalNCheck(_TorusCheck):
    """根公式与 θ̃ 给出的 N 一致"""

    suite = "calN"
    description = "n_via_roots equals n_pairing on the window"

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        torus = self.torus(case)
        lo, hi = case.window
        count = len(window_vertices(torus.quiver, lo, hi))
        return count ** 2, calN_failure(torus, lo, hi)


class NnKRCheck(_TorusCheck):
    """区间单项式的 N 值公式"""

    suite = "nnkr"
    description = "interval-monomial pairing formula"
    default_types = SMALL_TYPES

    def window(self, quiver: DynkinQuiver) -> Tuple[int, int]:
        if self.context.window:
            return self.context.window
        return min(quiver.xi) - 2 * quiver.datum.h, max(quiver.xi)

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        torus = self.torus(case)
        lo, hi = case.window
        count = sum(1 for _ in nnkr_cases(torus, lo, hi))
        return count, nnkr_failure(torus, lo, hi)


class YACheck(_TorusCheck):
    """B̃ 的交换公式与 wt_Q(B̃) = 0"""

    suite = "ya"
    description = "B-tilde commutation formulas and zero Q-weight"
    default_types = SMALL_TYPES

    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        torus = self.torus(case)
        lo, hi = case.window
        x_count = len(window_vertices(torus.quiver, lo, hi))
        b_count = torus.datum.rank * (hi - lo + 1) - x_count
        return x_count * b_count + b_count ** 2 + b_count, ya_failure(torus, lo, hi)

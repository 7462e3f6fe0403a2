"""
验证套件基类
定义所有验证检查的基础接口
"""

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..cartan import CartanDatum, build_datum
from ..quivers import (
    DynkinQuiver,
    linear_quiver,
    parse_height,
    random_quiver,
    sink_source_quiver,
)
from ..state import CheckResult
from ..utils.config import Config
from ..utils.console import log, log_error

# 各套件默认覆盖的类型
FAMILY_RANKS = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(4, 9),
}
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")


def types_up_to(rank: int, extra: Sequence[str] = ()) -> List[str]:
    """秩不超过 rank 的经典类型，加上额外的类型"""
    names = [
        f"{family}{n}" for family, ranks in FAMILY_RANKS.items() for n in ranks if n <= rank
    ]
    return names + [name for name in extra if name not in names]


ALL_SMALL_TYPES = types_up_to(8, EXCEPTIONAL)
MEDIUM_TYPES = types_up_to(5, ("F4", "G2"))
SMALL_TYPES = types_up_to(4, ("F4", "G2"))


@dataclass
class VerifyContext:
    """
    一次验证运行的公共输入

    type_name、height、word、window 来自命令行，为 None 时各套件使用自己的默认值。
    """
    config: Config = field(default_factory=Config)
    type_name: Optional[str] = None
    height: Optional[str] = None
    word: Optional[Tuple[int, ...]] = None
    window: Optional[Tuple[int, int]] = None

    @property
    def seed(self) -> int:
        return self.config.seed

    def types(self, defaults: Sequence[str]) -> List[str]:
        return [self.type_name] if self.type_name else list(defaults)

    def quivers(self, datum: CartanDatum, count: Optional[int] = None) -> List[DynkinQuiver]:
        """
        某一类型上要测试的箭图

        给出 --height 时只用该箭图；否则为线性箭图、汇源箭图和若干随机箭图（按种子确定）。
        """
        if self.height:
            return [parse_height(datum, self.height)]
        count = self.config.random_quivers if count is None else count
        rng = np.random.default_rng([self.seed, datum.rank, ord(datum.ctype.family)])
        quivers = [linear_quiver(datum), sink_source_quiver(datum)]
        quivers += [random_quiver(datum, rng) for _ in range(count)]
        unique = []
        for quiver in quivers:
            if quiver not in unique:
                unique.append(quiver)
        return unique

    def window_for(self, quiver: DynkinQuiver, factor: Optional[int] = None) -> Tuple[int, int]:
        """默认窗口为 [min ξ - k·h, max ξ + k·h]"""
        if self.window:
            return self.window
        k = self.config.window_factor if factor is None else factor
        h = quiver.datum.h
        return min(quiver.xi) - k * h, max(quiver.xi) + k * h


@dataclass(frozen=True)
class VerifyCase:
    """一个验证用例"""
    suite: str
    type_name: str
    xi: Optional[Tuple[int, ...]] = None
    word: Optional[Tuple[int, ...]] = None
    window: Optional[Tuple[int, int]] = None
    note: str = ""

    @property
    def datum(self) -> CartanDatum:
        return build_datum(self.type_name)

    @property
    def quiver(self) -> DynkinQuiver:
        if self.xi is None:
            raise ValueError(f"用例 {self.label} 没有高度函数")
        return DynkinQuiver(self.datum, self.xi)

    @property
    def label(self) -> str:
        parts = [self.type_name]
        if self.xi is not None:
            parts.append(f"ξ={list(self.xi)}")
        if self.word is not None:
            parts.append(f"w={list(self.word)}")
        if self.window is not None:
            parts.append(f"[{self.window[0]},{self.window[1]}]")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


class BaseCheck(ABC):
    """验证套件基类"""

    suite = ""
    description = ""

    def __init__(self, context: VerifyContext, check_name: str = ""):
        """
        初始化套件

        Args:
            context: 验证上下文
            check_name: 日志中使用的名称
        """
        self.context = context
        self.check_name = check_name or self.__class__.__name__

    @abstractmethod
    def cases(self) -> List[VerifyCase]:
        """
        生成本套件的全部用例

        Returns:
            用例列表
        """
        pass

    @abstractmethod
    def run(self, case: VerifyCase) -> Tuple[int, Optional[str]]:
        """
        执行单个用例

        Args:
            case: 用例

        Returns:
            (检查过的恒等式数量, 第一个反例或 None)
        """
        pass

    def validate_input(self, case: VerifyCase) -> bool:
        """
        验证用例

        Args:
            case: 用例

        Returns:
            验证是否通过
        """
        return case.suite == self.suite

    def execute(self, case: VerifyCase) -> CheckResult:
        """运行用例并把异常记为失败"""
        start = time.perf_counter()
        try:
            if not self.validate_input(case):
                raise ValueError(f"用例 {case.label} 不属于套件 {self.suite}")
            checked, counterexample = self.run(case)
            passed = counterexample is None
        except Exception as e:
            self.log_error(f"{case.label}: {e}")
            checked, counterexample, passed = 0, f"{type(e).__name__}: {e}", False
        return CheckResult(
            suite=self.suite,
            case=case.label,
            passed=passed,
            checked=checked,
            counterexample=counterexample,
            elapsed=time.perf_counter() - start,
        )

    def log_info(self, message: str):
        """记录信息日志"""
        log(self.check_name, message)

    def log_error(self, message: str):
        """记录错误日志"""
        log_error(self.check_name, message)

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "description": self.description}

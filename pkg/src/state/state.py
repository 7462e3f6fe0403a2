"""
验证报告状态管理
定义单个检查结果与整次运行报告的数据结构
"""

from dataclasses import dataclass, field
from typing import List, Dict, Any, Optional
import json
import os
from datetime import datetime


@dataclass
class CheckResult:
    """单个验证用例的结果"""
    suite: str = ""                         # 所属套件
    case: str = ""                          # 用例标签，如 "B3 ξ=[3,2,1]"
    passed: bool = False                    # 是否通过
    checked: int = 0                        # 检查过的恒等式数量
    counterexample: Optional[str] = None    # 第一个反例
    elapsed: float = 0.0                    # 耗时（秒）

    def sort_key(self):
        return self.suite, self.case

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "suite": self.suite,
            "case": self.case,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "elapsed": round(self.elapsed, 4),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        """从字典创建CheckResult对象"""
        return cls(
            suite=data.get("suite", ""),
            case=data.get("case", ""),
            passed=data.get("passed", False),
            checked=data.get("checked", 0),
            counterexample=data.get("counterexample"),
            elapsed=data.get("elapsed", 0.0),
        )


@dataclass
class VerifyReport:
    """一次验证运行的完整报告"""
    results: List[CheckResult] = field(default_factory=list)
    created_at: str = field(default_factory=lambda: datetime.now().isoformat())
    updated_at: str = field(default_factory=lambda: datetime.now().isoformat())

    def add_result(self, result: CheckResult):
        """添加结果并保持 (suite, case) 顺序"""
        self.results.append(result)
        self.results.sort(key=CheckResult.sort_key)
        self.update_timestamp()

    def update_timestamp(self):
        self.updated_at = datetime.now().isoformat()

    def all_passed(self) -> bool:
        return all(result.passed for result in self.results)

    def suites(self) -> List[str]:
        return sorted({result.suite for result in self.results})

    def failed_suites(self) -> List[str]:
        return sorted({result.suite for result in self.results if not result.passed})

    def first_counterexample(self, suite: str) -> Optional[str]:
        for result in self.results:
            if result.suite == suite and not result.passed:
                return f"{result.case}: {result.counterexample}"
        return None

    def get_summary(self) -> Dict[str, Any]:
        """
        按套件汇总

        Returns:
            {suite: {"cases", "passed", "checked", "counterexample"}}
        """
        summary: Dict[str, Any] = {}
        for suite in self.suites():
            rows = [r for r in self.results if r.suite == suite]
            summary[suite] = {
                "cases": len(rows),
                "passed": all(r.passed for r in rows),
                "checked": sum(r.checked for r in rows),
                "counterexample": self.first_counterexample(suite),
            }
        return summary

    def to_dict(self, with_timestamps: bool = True) -> Dict[str, Any]:
        """转换为字典格式；with_timestamps 为 False 时输出与运行时刻无关"""
        data = {
            "passed": self.all_passed(),
            "summary": self.get_summary(),
            "results": [result.to_dict() for result in sorted(self.results, key=CheckResult.sort_key)],
        }
        if with_timestamps:
            data["created_at"] = self.created_at
            data["updated_at"] = self.updated_at
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerifyReport":
        """从字典创建VerifyReport对象"""
        results = [CheckResult.from_dict(item) for item in data.get("results", [])]
        return cls(
            results=sorted(results, key=CheckResult.sort_key),
            created_at=data.get("created_at", datetime.now().isoformat()),
            updated_at=data.get("updated_at", datetime.now().isoformat()),
        )

    def to_json(self, indent: int = 2, with_timestamps: bool = True) -> str:
        """转换为JSON字符串"""
        return json.dumps(self.to_dict(with_timestamps), ensure_ascii=False, indent=indent)

    @classmethod
    def from_json(cls, json_str: str) -> "VerifyReport":
        """从JSON字符串创建VerifyReport对象"""
        return cls.from_dict(json.loads(json_str))

    def save_to_file(self, filepath: str):
        """保存报告到文件"""
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.to_json())

    @classmethod
    def load_from_file(cls, filepath: str) -> "VerifyReport":
        """从文件加载报告"""
        with open(filepath, 'r', encoding='utf-8') as f:
            json_str = f.read()
        return cls.from_json(json_str)

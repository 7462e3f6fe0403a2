"""
Verifier主类
整合所有验证套件，执行完整的验证流程
"""

import os
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import List, Optional, Sequence, Tuple

from rich.table import Table

from .checks import SUITES, BaseCheck, VerifyCase, VerifyContext
from .state import CheckResult, VerifyReport
from .utils import Config, banner, console, load_config, log


class Verifier:
    """验证器主类"""

    def __init__(self, config: Optional[Config] = None, context: Optional[VerifyContext] = None):
        """
        初始化验证器

        Args:
            config: 配置对象，如果不提供则自动加载
            context: 验证上下文（类型、高度函数、序列、窗口），默认全部使用套件默认值
        """
        self.config = config or load_config()
        self.context = context or VerifyContext(config=self.config)
        self.context.config = self.config
        self.report = VerifyReport()

    def _collect(self, suites: Sequence[str]) -> List[Tuple[BaseCheck, VerifyCase]]:
        """按套件顺序收集全部用例"""
        jobs = []
        for name in suites:
            if name not in SUITES:
                raise ValueError(f"未知的验证套件: {name}")
            check = SUITES[name](self.context)
            cases = check.cases()
            log("Verifier", f"套件 {name}: {len(cases)} 个用例")
            jobs.extend((check, case) for case in cases)
        return jobs

    def run(self, suites: Optional[Sequence[str]] = None, save_report: Optional[bool] = None) -> VerifyReport:
        """
        执行验证

        Args:
            suites: 要运行的套件名，默认全部
            save_report: 是否保存报告到文件，默认取配置中的 save_reports

        Returns:
            验证报告
        """
        suites = list(suites) if suites else list(SUITES)
        banner(f"开始验证: {', '.join(suites)}")

        jobs = self._collect(suites)
        self.report = VerifyReport()

        def execute(job: Tuple[BaseCheck, VerifyCase]) -> CheckResult:
            check, case = job
            return check.execute(case)

        # 结果按 (suite, case) 排序，与线程数无关
        with ThreadPoolExecutor(max_workers=self.config.threads) as pool:
            for result in pool.map(execute, jobs):
                status = "通过" if result.passed else "失败"
                log(result.suite, f"{result.case}: {status} ({result.checked} 项, {result.elapsed:.2f}s)")
                self.report.add_result(result)

        self.print_summary()

        if save_report if save_report is not None else self.config.save_reports:
            self._save_report()

        banner("验证完成！" if self.report.all_passed() else "验证发现反例")
        return self.report

    def print_summary(self):
        """打印各套件汇总"""
        table = Table(title="验证汇总")
        table.add_column("套件")
        table.add_column("用例", justify="right")
        table.add_column("恒等式", justify="right")
        table.add_column("结果")
        table.add_column("第一个反例")
        for suite, row in self.report.get_summary().items():
            table.add_row(
                suite,
                str(row["cases"]),
                str(row["checked"]),
                "[green]通过[/green]" if row["passed"] else "[red]失败[/red]",
                row["counterexample"] or "",
            )
        console.print(table)

    def _save_report(self):
        """保存报告到 output_dir"""
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        filepath = os.path.join(self.config.output_dir, f"verify_report_{timestamp}.json")
        self.report.save_to_file(filepath)
        log("Verifier", f"报告已保存到: {filepath}")


def create_verifier(config_file: Optional[str] = None, **context_args) -> Verifier:
    """
    创建验证器实例的便捷函数

    Args:
        config_file: 配置文件路径
        **context_args: 传给 VerifyContext 的字段

    Returns:
        Verifier实例
    """
    config = load_config(config_file)
    return Verifier(config, VerifyContext(config=config, **context_args))

"""
状态管理模块
定义验证运行的报告数据结构
"""

from .state import CheckResult, VerifyReport

__all__ = ["CheckResult", "VerifyReport"]

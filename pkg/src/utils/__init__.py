"""
工具函数模块
提供配置管理、控制台输出与结果序列化
"""

from .config import COMMANDS, FORMATS, Config, RunConfig, load_config, print_config
from .console import banner, console, log, log_error, output
from .emitters import dump_csv, dump_json, write_payload

__all__ = [
    "COMMANDS",
    "FORMATS",
    "Config",
    "RunConfig",
    "load_config",
    "print_config",
    "banner",
    "console",
    "log",
    "log_error",
    "output",
    "dump_csv",
    "dump_json",
    "write_payload",
]

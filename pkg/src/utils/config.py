"""
配置管理模块
处理环境变量、配置文件与命令行参数校验
"""

import os
import re
from dataclasses import dataclass, fields
from typing import List, Optional, Tuple

from pydantic import BaseModel, field_validator, model_validator
from rich.table import Table

from .console import console

THREADS_ENV = "QCARTAN_THREADS"

# 配置文件中的常量名 -> Config 字段
_FILE_KEYS = {
    "QCARTAN_THREADS": "threads",
    "DEFAULT_SEED": "seed",
    "RANDOM_QUIVERS": "random_quivers",
    "RANDOM_WORDS": "random_words",
    "WINDOW_FACTOR": "window_factor",
    "SERIES_FACTOR": "series_factor",
    "OUTPUT_DIR": "output_dir",
    "SAVE_REPORTS": "save_reports",
}


@dataclass
class Config:
    """配置类"""
    # 并行与随机性
    threads: int = 1
    seed: int = 0
    random_quivers: int = 3
    random_words: int = 100

    # 默认窗口为 ±window_factor·h，默认级数阶数为 series_factor·h
    window_factor: int = 2
    series_factor: int = 4

    # 输出配置
    output_dir: str = "reports"
    save_reports: bool = False

    def validate(self) -> bool:
        """验证配置"""
        if self.threads < 1:
            print(f"错误: 线程数必须 ≥ 1，当前为 {self.threads}")
            return False
        if self.random_quivers < 1:
            print(f"错误: 随机箭图数必须 ≥ 1，当前为 {self.random_quivers}")
            return False
        if self.random_words < 1:
            print(f"错误: 随机适配序列数必须 ≥ 1，当前为 {self.random_words}")
            return False
        if self.window_factor < 1:
            print(f"错误: 窗口倍数必须 ≥ 1，当前为 {self.window_factor}")
            return False
        if self.series_factor < 1:
            print(f"错误: 级数倍数必须 ≥ 1，当前为 {self.series_factor}")
            return False
        return True

    @classmethod
    def _coerce(cls, name: str, value):
        default = getattr(cls, name)
        if isinstance(default, bool):
            return value if isinstance(value, bool) else str(value).strip().lower() == "true"
        if isinstance(default, int):
            return int(value)
        return str(value)

    @classmethod
    def from_file(cls, config_file: str) -> "Config":
        """从配置文件创建配置"""
        values = {}
        if config_file.endswith('.py'):
            # Python配置文件
            import importlib.util

            spec = importlib.util.spec_from_file_location("qcartan_config", config_file)
            config_module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(config_module)
            for key, name in _FILE_KEYS.items():
                if hasattr(config_module, key):
                    values[name] = cls._coerce(name, getattr(config_module, key))
        else:
            # .env格式配置文件
            with open(config_file, 'r', encoding='utf-8') as f:
                for line in f:
                    line = line.strip()
                    if line and not line.startswith('#') and '=' in line:
                        key, value = line.split('=', 1)
                        name = _FILE_KEYS.get(key.strip())
                        if name:
                            values[name] = cls._coerce(name, value.strip().strip('"'))
        return cls(**values)

    def from_env(self) -> "Config":
        """用环境变量 QCARTAN_THREADS 覆盖线程数"""
        raw = os.environ.get(THREADS_ENV)
        if raw is not None and raw.strip():
            try:
                self.threads = int(raw)
            except ValueError:
                raise ValueError(f"环境变量 {THREADS_ENV} 必须是整数，当前为 '{raw}'")
        return self


def load_config(config_file: Optional[str] = None) -> Config:
    """
    加载配置

    Args:
        config_file: 配置文件路径，不指定时使用默认值

    Returns:
        配置对象
    """
    if config_file:
        if not os.path.exists(config_file):
            raise FileNotFoundError(f"配置文件不存在: {config_file}")
        config = Config.from_file(config_file)
    else:
        config = Config()

    config.from_env()

    if not config.validate():
        raise ValueError("配置验证失败，请检查配置项")

    return config


def print_config(config: Config):
    """打印配置信息"""
    table = Table(title="=== 当前配置 ===")
    table.add_column("配置项")
    table.add_column("值")
    for item in fields(config):
        table.add_row(item.name, str(getattr(config, item.name)))
    console.print(table)


# ---- 命令行参数校验 ----

COMMANDS = ("tables", "quiver", "torus", "pair", "verify")
FORMATS = ("json", "csv", "dot", "text")
_WORD_PATTERN = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


class RunConfig(BaseModel):
    """一次命令行调用的参数"""
    command: str
    type: Optional[str] = None
    height: Optional[str] = None
    word: Optional[str] = None
    window: Optional[Tuple[int, int]] = None
    format: str = "json"
    out: Optional[str] = None
    seed: int = 0
    threads: int = 1
    suites: List[str] = []

    @field_validator("command")
    @classmethod
    def _check_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"未知命令 '{value}'，可选: {', '.join(COMMANDS)}")
        return value

    @field_validator("type")
    @classmethod
    def _check_type(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        from ..cartan import CartanType

        return str(CartanType.parse(value))

    @field_validator("height")
    @classmethod
    def _check_height(cls, value: Optional[str]) -> Optional[str]:
        if value is None or value in ("linear", "sink-source"):
            return value
        if not re.match(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$", value):
            raise ValueError(f"高度函数 '{value}' 必须是逗号分隔的整数、linear 或 sink-source")
        return value

    @field_validator("word")
    @classmethod
    def _check_word(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        if not _WORD_PATTERN.match(value) or any(int(x) < 1 for x in value.split(",")):
            raise ValueError(f"序列 '{value}' 必须是逗号分隔的正整数")
        return value

    @field_validator("window", mode="before")
    @classmethod
    def _check_window(cls, value):
        if value is None:
            return value
        if isinstance(value, str):
            parts = value.split(",")
            if len(parts) != 2:
                raise ValueError(f"窗口 '{value}' 必须写成 lo,hi")
            value = (int(parts[0]), int(parts[1]))
        lo, hi = value
        if lo > hi:
            raise ValueError(f"窗口下界 {lo} 大于上界 {hi}")
        return lo, hi

    @field_validator("format")
    @classmethod
    def _check_format(cls, value: str) -> str:
        if value not in FORMATS:
            raise ValueError(f"未知输出格式 '{value}'，可选: {', '.join(FORMATS)}")
        return value

    @field_validator("seed")
    @classmethod
    def _check_seed(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"随机种子必须 ≥ 0，当前为 {value}")
        return value

    @field_validator("threads")
    @classmethod
    def _check_threads(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"线程数必须 ≥ 1，当前为 {value}")
        return value

    @field_validator("suites", mode="before")
    @classmethod
    def _check_suites(cls, value):
        from ..checks import SUITES

        if value is None:
            return []
        if isinstance(value, str):
            value = [part.strip() for part in value.split(",") if part.strip()]
        if "all" in value:
            return list(SUITES)
        unknown = [name for name in value if name not in SUITES]
        if unknown:
            raise ValueError(f"未知的验证套件: {', '.join(unknown)}，可选: {', '.join(SUITES)}, all")
        return list(value)

    @model_validator(mode="after")
    def _check_required(self) -> "RunConfig":
        if self.command in ("quiver", "torus", "pair", "tables") and self.type is None:
            raise ValueError(f"命令 {self.command} 需要 --type")
        return self

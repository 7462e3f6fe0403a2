"""
qcartan
量子Cartan矩阵、Dynkin箭图上的量子环面与相容对的计算与验证
"""

from .utils.config import Config, load_config
from .verifier import Verifier, create_verifier

__version__ = "1.0.0"

__all__ = ["Verifier", "create_verifier", "Config", "load_config"]

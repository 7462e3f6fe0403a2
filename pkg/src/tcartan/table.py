"""
逆t-量子化Cartan矩阵的系数表
以 δ̃_{i,j}(t) 的 0..h-1 次系数存储，其余 u 由延拓规则给出
"""

import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..cartan import CartanDatum, build_datum
from ..weyl import star
from .laurent import LaurentPoly

Pair = Tuple[int, int]


@dataclass
class TildeBTable:
    """
    δ̃ 系数表

    delta[(i, j)] 为长度 h 的整数列表，下标即 t 的次数。
    """
    datum: CartanDatum
    delta: Dict[Pair, List[int]] = field(default_factory=dict)

    def __post_init__(self):
        h = self.datum.h
        for pair, coefficients in self.delta.items():
            if len(coefficients) != h:
                raise ValueError(f"δ̃_{pair} 的系数个数 {len(coefficients)} 不等于 h = {h}")

    @property
    def h(self) -> int:
        return self.datum.h

    def star(self, j: int) -> int:
        return star(self.datum, j)

    def coefficients(self, i: int, j: int) -> List[int]:
        return self.delta[(i, j)]

    def delta_poly(self, i: int, j: int) -> LaurentPoly:
        return LaurentPoly.from_coefficients(self.delta[(i, j)])

    def tfb(self, i: int, j: int, u: int) -> int:
        """
        b̃_{i,j}(u)，u 为任意整数

        Args:
            i, j: 节点
            u: 整数

        Returns:
            u ≤ 0 时为0；0 < u < h 时查表；b̃(h) = 0；
            h < u < 2h 时为 -b̃_{i,j*}(u-h)；对 u > 0 以 2h 为周期
        """
        if u <= 0:
            return 0
        h = self.h
        r = u % (2 * h)
        if r == 0 or r == h:
            return 0
        if r < h:
            return self.delta[(i, j)][r]
        return -self.delta[(i, self.star(j))][r - h]

    def teta(self, i: int, j: int, u: int) -> int:
        """θ̃_{i,j}(u) = b̃_{i,j}(u) + b̃_{i,j}(-u)"""
        return self.tfb(i, j, u) + self.tfb(i, j, -u)

    def series(self, i: int, j: int, max_u: int) -> List[int]:
        return [self.tfb(i, j, u) for u in range(max_u + 1)]

    def pairs(self) -> List[Pair]:
        return sorted(self.delta)

    def __eq__(self, other):
        if not isinstance(other, TildeBTable):
            return NotImplemented
        return self.datum == other.datum and self.delta == other.delta

    def diff(self, other: "TildeBTable") -> List[Pair]:
        """系数不同的 (i, j) 列表"""
        return [pair for pair in self.pairs() if self.delta.get(pair) != other.delta.get(pair)]

    def to_dict(self) -> Dict:
        return {
            "type": str(self.datum.ctype),
            "h": self.h,
            "entries": {f"{i},{j}": list(v) for (i, j), v in sorted(self.delta.items())},
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "TildeBTable":
        datum = build_datum(data["type"])
        if int(data.get("h", datum.h)) != datum.h:
            raise ValueError(f"表中的 h = {data['h']} 与 {datum.ctype} 的Coxeter数 {datum.h} 不符")
        delta = {}
        for key, values in data["entries"].items():
            i, j = (int(part) for part in key.split(","))
            delta[(i, j)] = [int(v) for v in values]
        return cls(datum, delta)

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=indent)

    @classmethod
    def from_json(cls, json_str: str) -> "TildeBTable":
        return cls.from_dict(json.loads(json_str))

    def save_to_file(self, filepath: str):
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(filepath, "w", encoding="utf-8") as f:
            f.write(self.to_json())

    @classmethod
    def load_from_file(cls, filepath: str) -> "TildeBTable":
        with open(filepath, "r", encoding="utf-8") as f:
            return cls.from_json(f.read())

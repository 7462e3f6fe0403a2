"""
Cartan数据模块
按固定的节点编号构造有限型Cartan数据
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np
import sympy


# 各类型允许的秩
RANK_RULES = {
    "A": "n >= 1",
    "B": "n >= 2",
    "C": "n >= 2",
    "D": "n >= 4",
    "E": "n in {6, 7, 8}",
    "F": "n = 4",
    "G": "n = 2",
}

_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True)
class CartanType:
    """有限型Cartan类型，例如 B3、E8"""
    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper()
        object.__setattr__(self, "family", family)
        if family not in RANK_RULES:
            raise ValueError(f"未知的Cartan类型族: {self.family}，可选 A-G")
        if not self.is_valid_rank(family, self.rank):
            raise ValueError(
                f"{family}{self.rank} 的秩非法，{family} 型要求 {RANK_RULES[family]}"
            )

    @staticmethod
    def is_valid_rank(family: str, rank: int) -> bool:
        """检查秩是否合法"""
        if family == "A":
            return rank >= 1
        if family in ("B", "C"):
            return rank >= 2
        if family == "D":
            return rank >= 4
        if family == "E":
            return rank in (6, 7, 8)
        if family == "F":
            return rank == 4
        if family == "G":
            return rank == 2
        return False

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """
        解析类型字符串

        Args:
            text: 形如 "A5"、"b3"、"E_8" 的字符串（大小写不敏感）

        Returns:
            CartanType对象
        """
        match = _TYPE_PATTERN.match(text or "")
        if not match:
            raise ValueError(f"无法解析Cartan类型: {text!r}，示例: A5, B3, E8")
        return cls(match.group(1).upper(), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _diagram_edges(ctype: CartanType) -> List[Tuple[int, int]]:
    """Dynkin图的边（E型的分支节点编号为2）"""
    n = ctype.rank
    if ctype.family in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(1, n)]
    if ctype.family == "D":
        edges = [(i, i + 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
        return edges
    # E型: 1-3-4-5-...-n，2接在4上
    edges = [(1, 3), (2, 4)]
    edges += [(i, i + 1) for i in range(3, n)]
    return edges


def _symmetrizer(ctype: CartanType) -> Tuple[int, ...]:
    """对称化因子 d_i = (α_i, α_i)/2，短根取1"""
    n = ctype.rank
    if ctype.family == "B":
        return tuple([2] * (n - 1) + [1])
    if ctype.family == "C":
        return tuple([1] * (n - 1) + [2])
    if ctype.family == "F":
        return (2, 2, 1, 1)
    if ctype.family == "G":
        return (1, 3)
    return tuple([1] * n)


def _coxeter_number(ctype: CartanType) -> int:
    n = ctype.rank
    if ctype.family == "A":
        return n + 1
    if ctype.family in ("B", "C"):
        return 2 * n
    if ctype.family == "D":
        return 2 * n - 2
    if ctype.family == "E":
        return {6: 12, 7: 18, 8: 30}[n]
    if ctype.family == "F":
        return 12
    return 6


def _frozen_array(rows) -> np.ndarray:
    array = np.array(rows, dtype=object)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class CartanDatum:
    """
    有限型Cartan数据

    C[i][j] = <h_i, α_j>，Bsym = diag(d)·C 给出 (α_i, α_j)，
    dist 为Dynkin图上的距离，h 为Coxeter数。矩阵按0起始存储，
    对外的节点编号为 1..n。
    """
    ctype: CartanType
    C: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]
    Bsym: Tuple[Tuple[int, ...], ...]
    dist: Tuple[Tuple[int, ...], ...]
    h: int

    @property
    def rank(self) -> int:
        return self.ctype.rank

    @property
    def I(self) -> List[int]:
        return list(range(1, self.rank + 1))

    def c(self, i: int, j: int) -> int:
        """<h_i, α_j>"""
        return self.C[i - 1][j - 1]

    def distance(self, i: int, j: int) -> int:
        return self.dist[i - 1][j - 1]

    def sym(self, i: int) -> int:
        """d_i"""
        return self.d[i - 1]

    def neighbors(self, i: int) -> List[int]:
        """图上与 i 相邻的节点"""
        return [j for j in self.I if self.dist[i - 1][j - 1] == 1]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in self.I for j in self.I if i < j and self.distance(i, j) == 1]

    def check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise ValueError(f"节点编号 {i} 越界，{self.ctype} 的编号范围为 1..{self.rank}")

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return _frozen_array(self.C)

    @cached_property
    def bsym_array(self) -> np.ndarray:
        return _frozen_array(self.Bsym)

    @cached_property
    def cartan_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """C 的有理逆矩阵"""
        inverse = sympy.Matrix(self.C).inv()
        return tuple(
            tuple(Fraction(int(entry.p), int(entry.q)) for entry in inverse.row(r))
            for r in range(self.rank)
        )

    def to_dict(self) -> Dict:
        return {
            "type": str(self.ctype),
            "C": [list(row) for row in self.C],
            "d": list(self.d),
            "Bsym": [list(row) for row in self.Bsym],
            "dist": [list(row) for row in self.dist],
            "h": self.h,
        }


@lru_cache(maxsize=None)
def _build(ctype: CartanType) -> CartanDatum:
    n = ctype.rank
    d = _symmetrizer(ctype)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(_diagram_edges(ctype))
    lengths = dict(nx.all_pairs_shortest_path_length(graph))
    dist = tuple(tuple(lengths[i][j] for j in range(1, n + 1)) for i in range(1, n + 1))

    bsym = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2 * d[i])
            elif dist[i][j] == 1:
                row.append(-max(d[i], d[j]))
            else:
                row.append(0)
        bsym.append(tuple(row))
    # C_{ij} = (α_i, α_j) / d_i，邻接处 d 之比总是整数
    cartan = tuple(tuple(bsym[i][j] // d[i] for j in range(n)) for i in range(n))
    return CartanDatum(
        ctype=ctype, C=cartan, d=d, Bsym=tuple(bsym), dist=dist, h=_coxeter_number(ctype)
    )


def build_datum(ctype) -> CartanDatum:
    """
    构造Cartan数据

    Args:
        ctype: CartanType 或类型字符串（如 "B3"）

    Returns:
        CartanDatum对象，同一类型返回同一实例
    """
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    return _build(ctype)

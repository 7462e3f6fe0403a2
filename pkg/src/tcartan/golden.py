"""
已发表的 δ̃_{i,j}(t) 表
每个条目写成 "系数*次数" 的列表，系数为1时省略
"""

from typing import Dict, List, Optional, Tuple

from ..cartan import build_datum
from ..weyl import star
from .table import TildeBTable

Pair = Tuple[int, int]

_RAW: Dict[str, Dict[Pair, str]] = {
    "B3": {
        (1, 1): "2*1 2*5", (1, 2): "2*2 2*4", (1, 3): "2*3",
        (2, 2): "2*1 4*3 2*5", (2, 3): "2*2 2*4", (3, 3): "1 3 5",
    },
    "C3": {
        (1, 1): "1 5", (1, 2): "2 4", (1, 3): "2*3",
        (2, 2): "1 2*3 5", (2, 3): "2*2 2*4", (3, 3): "2*1 2*3 2*5",
    },
    "F4": {
        (1, 1): "2*1 2*5 2*7 2*11",
        (1, 2): "2*2 2*4 4*6 2*8 2*10",
        (1, 3): "2*3 2*5 2*7 2*9",
        (1, 4): "2*4 2*8",
        (2, 2): "2*1 4*3 6*5 6*7 4*9 2*11",
        (2, 3): "2*2 4*4 4*6 4*8 2*10",
        (2, 4): "2*3 2*5 2*7 2*9",
        (3, 3): "1 2*3 3*5 3*7 2*9 11",
        (3, 4): "2 4 2*6 8 10",
        (4, 4): "1 5 7 11",
    },
    "G2": {
        (1, 1): "1 2*3 5", (1, 2): "3*2 3*4", (2, 2): "3*1 6*3 3*5",
    },
    "E6": {
        (1, 1): "1 7", (1, 2): "4 8", (1, 3): "2 6 8", (1, 4): "3 5 7 9",
        (1, 5): "4 6 10", (1, 6): "5 11",
        (2, 2): "1 5 7 11", (2, 3): "3 5 7 9", (2, 4): "2 4 2*6 8 10",
        (3, 3): "1 3 5 2*7 9", (3, 4): "2 2*4 2*6 2*8 10", (3, 5): "3 2*5 7 9 11",
        (4, 4): "1 2*3 3*5 3*7 2*9 11",
    },
    "E7": {
        (1, 1): "1 7 11 17",
        (1, 2): "4 8 10 14",
        (1, 3): "2 6 8 10 12 16",
        (1, 4): "3 5 7 2*9 11 13 15",
        (1, 6): "5 7 11 13",
        (1, 7): "6 12",
        (2, 2): "1 5 7 9 11 13 17",
        (2, 3): "=1,4",
        (2, 4): "2 4 2*6 2*8 2*10 2*12 14 16",
        (2, 5): "3 5 2*7 9 2*11 13 15",
        (2, 6): "4 6 8 10 12 14",
        (2, 7): "5 9 13",
        (3, 3): "1 3 5 2*7 2*9 2*11 13 15 17",
        (3, 4): "2 2*4 2*6 3*8 3*10 2*12 2*14 16",
        (3, 5): "3 2*5 2*7 2*9 2*11 2*13 15",
        (3, 6): "4 2*6 8 10 2*12 14",
        (3, 7): "5 7 11 13",
        (4, 4): "1 2*3 3*5 4*7 4*9 4*11 3*13 2*15 17",
        (4, 5): "2 2*4 3*6 3*8 3*10 3*12 2*14 16",
        (4, 6): "=3,5",
        (4, 7): "4 6 8 10 12 14",
        (5, 5): "1 3 2*5 2*7 3*9 2*11 2*13 15 17",
        (5, 6): "2 4 6 2*8 2*10 12 14 16",
        (5, 7): "3 7 11 15",
        (6, 6): "1 3 7 2*9 11 15 17",
        (6, 7): "2 8 10 16",
        (7, 7): "1 9 17",
    },
    "E8": {
        (1, 1): "1 7 11 13 17 19 23 29",
        (1, 2): "4 8 10 12 14 16 18 20 22 26",
        (1, 3): "2 6 8 10 2*12 14 16 2*18 20 22 24 28",
        (1, 4): "3 5 7 2*9 2*11 2*13 2*15 2*17 2*19 2*21 23 25 27",
        (1, 5): "4 6 8 2*10 12 2*14 2*16 18 2*20 22 24 26",
        (1, 6): "5 7 9 11 13 2*15 17 19 21 23 25",
        (1, 7): "6 8 12 14 16 18 22 24",
        (1, 8): "7 13 17 23",
        (2, 2): "1 5 7 9 2*11 13 2*15 17 2*19 21 23 25 29",
        (2, 3): "3 5 7 2*9 2*11 2*13 2*15 2*17 2*19 2*21 23 25 27",
        (2, 4): "2 4 2*6 2*8 3*10 3*12 3*14 3*16 3*18 3*20 2*22 2*24 26 28",
        (2, 5): "3 5 2*7 2*9 2*11 3*13 3*15 3*17 2*19 2*21 2*23 25 27",
        (2, 6): "4 6 2*8 10 2*12 2*14 2*16 2*18 20 2*22 24 26",
        (2, 7): "=1,6",
        (2, 8): "6 10 14 16 20 24",
        (3, 3): "1 3 5 2*7 2*9 3*11 3*13 2*15 3*17 3*19 2*21 2*23 25 27 29",
        (3, 4): "2 2*4 2*6 3*8 4*10 4*12 4*14 4*16 4*18 4*20 3*22 2*24 2*26 28",
        (3, 5): "3 2*5 2*7 3*9 3*11 3*13 4*15 3*17 3*19 3*21 2*23 2*25 27",
        (3, 6): "4 2*6 2*8 2*10 2*12 3*14 3*16 2*18 2*20 2*22 2*24 26",
        (3, 7): "5 2*7 9 11 2*13 2*15 2*17 19 21 2*23 25",
        (3, 8): "6 8 12 14 16 18 22 24",
        (4, 4): "1 2*3 3*5 4*7 5*9 6*11 6*13 6*15 6*17 6*19 5*21 4*23 3*25 2*27 29",
        (4, 5): "2 2*4 3*6 4*8 4*10 5*12 5*14 5*16 5*18 4*20 4*22 3*24 2*26 28",
        (4, 6): "3 2*5 3*7 3*9 3*11 4*13 4*15 4*17 3*19 3*21 3*23 2*25 27",
        (4, 7): "=3,6",
        (4, 8): "5 7 9 11 13 2*15 17 19 21 23 25",
        (5, 5): "1 3 2*5 3*7 3*9 4*11 4*13 4*15 4*17 4*19 3*21 3*23 2*25 27 29",
        (5, 6): "2 4 2*6 2*8 3*10 3*12 3*14 3*16 3*18 3*20 2*22 2*24 26 28",
        (5, 7): "3 5 7 2*9 2*11 2*13 2*15 2*17 2*19 2*21 23 25 27",
        (5, 8): "4 8 10 12 14 16 18 20 22 26",
        (6, 6): "1 3 5 7 2*9 3*11 2*13 2*15 2*17 3*19 2*21 23 25 27 29",
        (6, 7): "2 4 8 2*10 2*12 14 16 2*18 2*20 22 26 28",
        (6, 8): "3 9 11 13 17 19 21 27",
        (7, 7): "1 3 9 2*11 13 17 2*19 21 27 29",
        (7, 8): "2 10 12 18 20 28",
        (8, 8): "1 11 19 29",
    },
}

GOLDEN_TYPES = tuple(_RAW)

# 已发表表格中的排印错误：(已发表写法, 更正写法)，更正值与 η 和级数求逆一致
ERRATA: Dict[str, Dict[Pair, Tuple[str, str]]] = {
    "E7": {(5, 7): ("3 7 11 15", "3 7 9 11 15")},
    "E8": {(2, 5): ("3 5 2*7 2*9 2*11 3*13 3*15 3*17 2*19 2*21 2*23 25 27",
                    "3 5 2*7 2*9 2*11 3*13 2*15 3*17 2*19 2*21 2*23 25 27")},
}


def _expand(text: str, h: int) -> List[int]:
    coefficients = [0] * h
    for token in text.split():
        if "*" in token:
            value, exponent = token.split("*")
        else:
            value, exponent = "1", token
        coefficients[int(exponent)] += int(value)
    return coefficients


def _reflect(coefficients: List[int], h: int) -> List[int]:
    # t^h·δ̃(t^{-1})，δ̃ 的常数项为0
    return [0] + [coefficients[h - u] for u in range(1, h)]


def golden_table(type_name: str, apply_errata: bool = True) -> TildeBTable:
    """
    某一类型的已发表表格

    按 δ̃_{i,j} = δ̃_{j,i} 与 δ̃_{i,j}(t) = t^h δ̃_{i,j*}(t^{-1}) 补全未列出的条目；
    无法补全的条目不出现在表中。

    Args:
        type_name: GOLDEN_TYPES 中的类型
        apply_errata: 是否按 ERRATA 更正排印错误

    Returns:
        可能缺少个别条目的 TildeBTable
    """
    if type_name not in _RAW:
        raise ValueError(f"没有 {type_name} 的已发表表格，可选: {', '.join(GOLDEN_TYPES)}")
    datum = build_datum(type_name)
    h = datum.h
    raw = dict(_RAW[type_name])
    if apply_errata:
        for pair, (_, corrected) in ERRATA.get(type_name, {}).items():
            raw[pair] = corrected
    delta: Dict[Pair, List[int]] = {}
    for pair, text in raw.items():
        if not text.startswith("="):
            delta[pair] = _expand(text, h)
    for pair, text in raw.items():
        if text.startswith("="):
            source = tuple(int(part) for part in text[1:].split(","))
            delta[pair] = list(delta[source])

    changed = True
    while changed:
        changed = False
        for i in datum.I:
            for j in datum.I:
                if (i, j) in delta:
                    continue
                value: Optional[List[int]] = None
                if (j, i) in delta:
                    value = list(delta[(j, i)])
                elif (i, star(datum, j)) in delta:
                    value = _reflect(delta[(i, star(datum, j))], h)
                elif (star(datum, j), i) in delta:
                    value = _reflect(delta[(star(datum, j), i)], h)
                if value is not None:
                    delta[(i, j)] = value
                    changed = True
    return TildeBTable(datum, delta)


def published_tables() -> Dict[str, TildeBTable]:
    """全部已发表表格"""
    return {name: golden_table(name) for name in GOLDEN_TYPES}

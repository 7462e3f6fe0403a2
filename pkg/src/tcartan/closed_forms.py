"""
A、B、C、D 型 δ̃_{i,j}(t) 的闭公式
"""

from ..cartan import CartanType
from .laurent import LaurentPoly

CLOSED_FAMILIES = ("A", "B", "C", "D")


def _t(exponent: int) -> LaurentPoly:
    return LaurentPoly.monomial(exponent)


def _closed_a(n: int, i: int, j: int) -> LaurentPoly:
    result = LaurentPoly()
    for s in range(1, min(i, j, n + 1 - i, n + 1 - j) + 1):
        result = result + _t(abs(i - j) + 2 * s - 1)
    return result


def _closed_d(m: int, i: int, j: int) -> LaurentPoly:
    # D_m 记作 D_{n+1}，节点 n、n+1 为两个分叉端点，到两端的距离相同
    n = m - 1
    result = LaurentPoly()
    if min(i, j) < n:
        distance = abs(min(i, n) - min(j, n))
        for s in range(1, min(i, j) + 1):
            result = result + _t(distance + 2 * s - 1)
            if max(i, j) < n:
                result = result + _t(2 * n - i - j + 2 * s - 1)
        return result
    same = int(i == j)
    for s in range(1, (n + same) // 2 + 1):
        result = result + _t(4 * s - 1 - 2 * same)
    return result


def _closed_bc(family: str, n: int, i: int, j: int) -> LaurentPoly:
    i, j = min(i, j), max(i, j)
    d_long = 2
    long_nodes = range(1, n) if family == "B" else (n,)
    factor = d_long if (i in long_nodes or j in long_nodes) else 1
    result = LaurentPoly()
    for s in range(1, i + 1):
        if j == n:
            result = result + _t(n - i - 1 + 2 * s)
        else:
            result = result + _t(j - i + 2 * s - 1) + _t(2 * n - j - i + 2 * s - 1)
    return result.scale(factor)


def closed_formula(ctype, i: int, j: int) -> LaurentPoly:
    """
    δ̃_{i,j}(t) 的闭公式

    Args:
        ctype: A/B/C/D 型的 CartanType 或类型字符串
        i, j: 节点，D 型沿用 D_m 的 1..m 编号

    Returns:
        δ̃_{i,j}(t)
    """
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    if ctype.family not in CLOSED_FAMILIES:
        raise ValueError(f"{ctype} 没有闭公式，只支持 {'/'.join(CLOSED_FAMILIES)} 型")
    n = ctype.rank
    for index in (i, j):
        if not 1 <= index <= n:
            raise ValueError(f"节点编号 {index} 越界，{ctype} 的编号范围为 1..{n}")
    if ctype.family == "A":
        return _closed_a(n, i, j)
    if ctype.family == "D":
        return _closed_d(n, i, j)
    return _closed_bc(ctype.family, n, i, j)

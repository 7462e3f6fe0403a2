"""
不依赖箭图的两种求逆方法
"""

from typing import Dict, List, Tuple

import sympy

from ..cartan import CartanDatum
from ..weyl import star
from .laurent import LaurentPoly
from .matrices import b_matrix, t, to_sympy_matrix

Pair = Tuple[int, int]


def inverse_via_series(datum: CartanDatum, degree: int) -> Dict[Pair, List[int]]:
    """
    逐阶求解 B̃(t) 的幂级数系数

    由 Σ_k c_{k,i}(t)·b̃_{k,j}(t) = d_i δ(i=j) 比较 t^u 的系数：
    x_{ij}(u+1) = d_i δ(i=j) δ(u=0) - x_{ij}(u-1) - Σ_{k≠i} c_{k,i} x_{kj}(u)。

    Args:
        datum: Cartan数据
        degree: 截断次数 N ≥ 1

    Returns:
        (i, j) -> 0..N 次系数
    """
    if degree < 1:
        raise ValueError(f"级数截断次数必须 ≥ 1，收到 {degree}")
    n = datum.rank
    # x[u][i][j]，u = -1 存在末尾方便取下标
    x = [[[0] * n for _ in range(n)] for _ in range(degree + 2)]
    for u in range(degree):
        previous = x[u - 1] if u >= 1 else x[-1]
        for i in range(n):
            for j in range(n):
                value = datum.d[i] if (i == j and u == 0) else 0
                value -= previous[i][j]
                value -= sum(
                    datum.C[k][i] * x[u][k][j] for k in range(n) if k != i and datum.C[k][i]
                )
                x[u + 1][i][j] = value
    return {
        (i + 1, j + 1): [x[u][i][j] for u in range(degree + 1)]
        for i in range(n)
        for j in range(n)
    }


def inverse_via_rational(datum: CartanDatum) -> Dict[Pair, List[int]]:
    """
    在 Q(t) 上精确求逆 B(t)，返回 δ̃ 的 0..h-1 次系数

    由 b̃(u+h) = -b̃_{i,j*}(u) 得 (1 - t^{2h})·B̃_{ij}(t) = δ̃_{ij}(t) - t^h·δ̃_{ij*}(t)，
    前 h 个系数即 δ̃_{ij}，后 h 个系数须与 -δ̃_{ij*} 一致。

    Args:
        datum: Cartan数据（秩较小时使用）

    Returns:
        (i, j) -> 系数列表
    """
    h = datum.h
    inverse = to_sympy_matrix(b_matrix(datum)).inv()
    folded = {}
    for i in datum.I:
        for j in datum.I:
            numerator = sympy.cancel((1 - t ** (2 * h)) * inverse[i - 1, j - 1])
            poly = LaurentPoly.from_sympy(numerator, t)
            if not poly.is_polynomial() or (poly and poly.degree >= 2 * h):
                raise ValueError(f"(1 - t^2h)·B̃_{i},{j} = {numerator} 不是次数小于 2h 的多项式")
            if not poly.is_integral():
                raise ValueError(f"(1 - t^2h)·B̃_{i},{j} = {numerator} 的系数不是整数")
            folded[(i, j)] = [int(c) for c in poly.coefficient_list(2 * h)]
    result = {}
    for (i, j), coefficients in folded.items():
        tail = folded[(i, star(datum, j))][:h]
        if coefficients[h:] != [-c for c in tail]:
            raise ValueError(f"δ̃_{i},{j} 的 t^h..t^(2h-1) 系数与 -δ̃_{i},{star(datum, j)} 不符")
        result[(i, j)] = coefficients[:h]
    return result

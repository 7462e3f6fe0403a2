"""
δ̃ 系数表的结构性质
"""

from typing import Iterable, Optional

from ..quivers import DynkinQuiver
from .eta import eta, inverse_via_eta
from .table import TildeBTable


def structure_failure(table: TildeBTable) -> Optional[str]:
    """
    检查系数表的结构性质

    包括对称性、δ̃(0) = 0、δ̃ 的一次项为 d_i δ(i=j)、0..h-1 次系数非负、
    u ≤ d(i,j) 及奇偶不符时为0、b̃(h) = 0、b̃(u+h) = -b̃_{i,j*}(u)、2h 周期、
    b̃(h-u) = b̃_{i,j*}(u)，以及 θ̃ 满足的递推关系（|u| ≤ 2h）。

    Returns:
        第一个反例的描述，全部成立时返回 None
    """
    datum = table.datum
    h = datum.h
    for i in datum.I:
        for j in datum.I:
            coefficients = table.coefficients(i, j)
            if coefficients != table.coefficients(j, i):
                return f"δ̃_{i},{j} ≠ δ̃_{j},{i}"
            if coefficients[0] != 0:
                return f"δ̃_{i},{j} 的常数项非零"
            if coefficients[1] != (datum.sym(i) if i == j else 0):
                return f"b̃_{i},{j}(1) = {coefficients[1]}"
            if any(c < 0 for c in coefficients):
                return f"δ̃_{i},{j} 有负系数"
            dist = datum.distance(i, j)
            j_star = table.star(j)
            for u in range(-2 * h, 2 * h + 1):
                value = table.tfb(i, j, u)
                if u <= dist and value != 0:
                    return f"b̃_{i},{j}({u}) = {value}，但 u ≤ d(i,j) = {dist}"
                if (u - dist - 1) % 2 and value != 0:
                    return f"b̃_{i},{j}({u}) = {value}，奇偶不符"
                if u >= 0:
                    if table.tfb(i, j, u + h) != -table.tfb(i, j_star, u):
                        return f"b̃_{i},{j}({u + h}) ≠ -b̃_{i},{j_star}({u})"
                    if table.tfb(i, j, u + 2 * h) != value:
                        return f"b̃_{i},{j} 在 u = {u} 处不是 2h 周期"
                if 0 <= u <= h and table.tfb(i, j, h - u) != table.tfb(i, j_star, u):
                    return f"b̃_{i},{j}({h - u}) ≠ b̃_{i},{j_star}({u})"
                recurrence = table.teta(i, j, u - 1) + table.teta(i, j, u + 1) + sum(
                    datum.c(k, j) * table.teta(i, k, u) for k in datum.neighbors(j)
                )
                expected = 2 * datum.sym(i) if (u == 0 and i == j) else 0
                if recurrence != expected:
                    return f"θ̃_{i},{j} 的递推在 u = {u} 处为 {recurrence}，期望 {expected}"
            if table.tfb(i, j, h) != 0:
                return f"b̃_{i},{j}(h) ≠ 0"
    return None


def eta_extension_failure(table: TildeBTable, quiver: DynkinQuiver) -> Optional[str]:
    """|u| ≤ 2h 上 b̃(u) - b̃(-u) = (ϖ_i, τ^{(u+ξ_j-ξ_i-1)/2} γ_j)"""
    datum = table.datum
    for i in datum.I:
        for j in datum.I:
            for u in range(-2 * datum.h, 2 * datum.h + 1):
                lhs = table.tfb(i, j, u) - table.tfb(i, j, -u)
                rhs = eta(quiver, i, j, u)
                if lhs != rhs:
                    return f"ξ={list(quiver.xi)}: b̃_{i},{j}({u}) - b̃_{i},{j}({-u}) = {lhs} ≠ {rhs}"
    return None


def independence_failure(quivers: Iterable[DynkinQuiver]) -> Optional[str]:
    """不同箭图给出的 η 表应完全一致"""
    reference = None
    reference_xi = None
    for quiver in quivers:
        table = inverse_via_eta(quiver)
        if reference is None:
            reference, reference_xi = table, quiver.xi
            continue
        different = reference.diff(table)
        if different:
            return f"ξ={list(reference_xi)} 与 ξ={list(quiver.xi)} 在 {different[0]} 处不同"
    return None


def series_failure(table: TildeBTable, series) -> Optional[str]:
    """逐阶级数系数与 tfb 延拓一致"""
    for (i, j), coefficients in sorted(series.items()):
        for u, value in enumerate(coefficients):
            if table.tfb(i, j, u) != value:
                return f"x_{i},{j}({u}) = {value}，tfb = {table.tfb(i, j, u)}"
    return None

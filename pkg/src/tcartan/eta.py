"""
η 函数与由此得到的逆矩阵系数
"""

from ..quivers import DynkinQuiver
from .table import TildeBTable


def eta(quiver: DynkinQuiver, i: int, j: int, u: int) -> int:
    """
    η_{i,j}(u) = (ϖ_i, τ^{(u+ξ_j-ξ_i-1)/2} γ_j)

    Args:
        quiver: Dynkin箭图
        i, j: 节点
        u: 整数

    Returns:
        指数为整数时的配对值，否则为0
    """
    exponent = u + quiver.height(j) - quiver.height(i) - 1
    if exponent % 2:
        return 0
    root = quiver.tau_gamma(j, exponent // 2)
    # (ϖ_i, β) = d_i β_i
    return quiver.datum.sym(i) * root.coords[i - 1]


def inverse_via_eta(quiver: DynkinQuiver) -> TildeBTable:
    """由 η 在 u = 0..h-1 上的取值构造 δ̃ 系数表"""
    datum = quiver.datum
    delta = {
        (i, j): [eta(quiver, i, j, u) for u in range(datum.h)]
        for i in datum.I
        for j in datum.I
    }
    return TildeBTable(datum, delta)

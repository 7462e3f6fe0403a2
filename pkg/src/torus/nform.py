"""
量子环面的指数型 N
"""

from typing import Dict, Mapping, Tuple

from ..cartan import bilinear
from ..quivers import DynkinQuiver, RepVertex
from ..tcartan import TildeBTable


class NForm:
    """
    N(i,p;j,s) = θ̃_{i,j}(p-s-1) - θ̃_{i,j}(p-s+1)

    满足 X_{i,p} X_{j,s} = q^{N(i,p;j,s)} X_{j,s} X_{i,p}。
    """

    def __init__(self, table: TildeBTable):
        self.table = table
        self.datum = table.datum
        self._cache: Dict[Tuple[int, int, int, int], int] = {}

    def check_pair(self, a: RepVertex, b: RepVertex):
        self.datum.check_index(a.i)
        self.datum.check_index(b.i)
        if (a.p - b.p - self.datum.distance(a.i, b.i)) % 2:
            raise ValueError(f"顶点 {a} 与 {b} 不在同一奇偶类中")

    def pairing(self, a: RepVertex, b: RepVertex) -> int:
        """
        两个顶点之间的 N 值

        Args:
            a, b: 重复箭图顶点

        Returns:
            整数 N(a; b)
        """
        key = (a.i, a.p, b.i, b.p)
        if key not in self._cache:
            self.check_pair(a, b)
            x = a.p - b.p
            self._cache[key] = self.table.teta(a.i, b.i, x - 1) - self.table.teta(a.i, b.i, x + 1)
        return self._cache[key]

    def n_monomials(self, m1: Mapping[RepVertex, int], m2: Mapping[RepVertex, int]) -> int:
        """对指数映射双线性延拓"""
        return sum(e * f * self.pairing(a, b) for a, e in m1.items() for b, f in m2.items())


def n_via_roots(quiver: DynkinQuiver, a: RepVertex, b: RepVertex) -> int:
    """
    用 φ_Q 计算 N

    φ_Q(a) = (α, k)，φ_Q(b) = (β, l) 时为
    (-1)^{k+l+δ(p ≥ s)} δ(a ≠ b) (α, β)。
    """
    if a == b:
        quiver.check_parity(a.i, a.p)
        return 0
    x = quiver.phi(a.i, a.p)
    y = quiver.phi(b.i, b.p)
    sign = -1 if (x.level + y.level + int(a.p >= b.p)) % 2 else 1
    return sign * bilinear(quiver.datum, x.root, y.root)

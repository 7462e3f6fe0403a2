"""
量子环面 X_q
正规序乘法、bar 对合、区间单项式、B̃ 单项式与 Q-权
"""

from typing import Dict, List, Mapping, Optional, Tuple

from ..cartan import LatticeVec
from ..quivers import DynkinQuiver, RepVertex
from ..tcartan import TildeBTable, inverse_via_eta
from .monomial import TorusElement, TorusMonomial, normal_key
from .nform import NForm


class QuantumTorus:
    """
    由 DynkinQuiver 给出奇偶类的量子环面

    N 只依赖于Cartan数据；箭图决定顶点的奇偶条件与 Q-权。
    """

    def __init__(self, quiver: DynkinQuiver, table: Optional[TildeBTable] = None):
        self.quiver = quiver
        self.datum = quiver.datum
        self.table = table if table is not None else inverse_via_eta(quiver)
        self.nform = NForm(self.table)

    # ---- 生成元 ----

    def vertex(self, i: int, p: int) -> RepVertex:
        self.quiver.check_parity(i, p)
        return RepVertex(i, p)

    def X(self, i: int, p: int, e: int = 1) -> TorusMonomial:
        """X_{i,p}^e，q 指数为0"""
        return TorusMonomial.from_map({self.vertex(i, p): e})

    def monomial(self, exps: Mapping[Tuple[int, int], int], qpow2: int = 0) -> TorusMonomial:
        """由 {(i, p): e} 构造正规序单项式"""
        return TorusMonomial.from_map({self.vertex(i, p): e for (i, p), e in exps.items()}, qpow2)

    def pairing(self, a: RepVertex, b: RepVertex) -> int:
        return self.nform.pairing(a, b)

    def n_monomials(self, m1: TorusMonomial, m2: TorusMonomial) -> int:
        return self.nform.n_monomials(m1.exp_map, m2.exp_map)

    def _ordered_form(self, monomial: TorusMonomial) -> int:
        # Σ_{j<l} e_j e_l N(a_j; a_l)，按正规序
        total = 0
        exps = monomial.exps
        for index, (a, e) in enumerate(exps):
            for b, f in exps[index + 1:]:
                total += e * f * self.pairing(a, b)
        return total

    # ---- 乘法 ----

    def multiply_monomials(self, m1: TorusMonomial, m2: TorusMonomial) -> TorusMonomial:
        """
        两个正规序单项式之积

        把 m2 的每个因子移到 m1 中序更大的因子左侧，
        每次交换 X_a^e X_b^f = q^{ef N(a,b)} X_b^f X_a^e。
        """
        shift = 0
        for a, e in m1.exps:
            for b, f in m2.exps:
                if normal_key(a) > normal_key(b):
                    shift += e * f * self.pairing(a, b)
        exps: Dict[RepVertex, int] = m1.exp_map
        for b, f in m2.exps:
            exps[b] = exps.get(b, 0) + f
        return TorusMonomial.from_map(exps, m1.qpow2 + m2.qpow2 + 2 * shift)

    def multiply(self, e1: TorusElement, e2: TorusElement) -> TorusElement:
        return TorusElement.from_terms(
            (self.multiply_monomials(m1, m2), c1 * c2)
            for m1, c1 in e1.terms
            for m2, c2 in e2.terms
        )

    def product(self, *monomials: TorusMonomial) -> TorusMonomial:
        """按给定次序的单项式乘积"""
        result = TorusMonomial.one()
        for monomial in monomials:
            result = self.multiply_monomials(result, monomial)
        return result

    def inverse(self, monomial: TorusMonomial) -> TorusMonomial:
        """单项式的逆"""
        exps = {v: -e for v, e in monomial.exps}
        qpow2 = -monomial.qpow2 - 2 * self._ordered_form(monomial)
        return TorusMonomial.from_map(exps, qpow2)

    # ---- bar 对合 ----

    def _weighted_degree(self, monomial: TorusMonomial) -> int:
        return sum(self.datum.sym(v.i) * e for v, e in monomial.exps)

    def bar_monomial(self, monomial: TorusMonomial) -> TorusMonomial:
        """反乘性对合：q^{1/2} ↦ q^{-1/2}，X_{i,p} ↦ q^{d_i} X_{i,p}"""
        qpow2 = -monomial.qpow2 + 2 * (self._weighted_degree(monomial) - self._ordered_form(monomial))
        return monomial.with_qpow2(qpow2)

    def bar(self, element: TorusElement) -> TorusElement:
        return TorusElement.from_terms((self.bar_monomial(m), c) for m, c in element.terms)

    def bar_normalize(self, monomial: TorusMonomial) -> TorusMonomial:
        """唯一的 bar 不变的 q^r·m"""
        return monomial.with_qpow2(self._weighted_degree(monomial) - self._ordered_form(monomial))

    def is_bar_invariant(self, monomial: TorusMonomial) -> bool:
        return self.bar_monomial(monomial) == monomial

    # ---- 区间单项式与 B̃ ----

    def interval_monomial(self, i: int, a: int, b: int) -> TorusMonomial:
        """
        m^{(i)}[a, b]

        Args:
            i: 节点
            a, b: 满足奇偶条件的端点，a ≤ b

        Returns:
            a ≤ p ≤ b 上 X_{i,p} 之积的 bar 不变正规化
        """
        if a > b:
            raise ValueError(f"区间下端 {a} 大于上端 {b}")
        self.quiver.check_parity(i, a)
        self.quiver.check_parity(i, b)
        exps = {RepVertex(i, p): 1 for p in range(a, b + 1, 2)}
        return self.bar_normalize(TorusMonomial.from_map(exps))

    def b_monomial(self, i: int, p: int) -> TorusMonomial:
        """
        B̃_{i,p} = q^{n} X_{i,p-1} X_{i,p+1} Π_{j~i} X_{j,p}^{c_{j,i}}

        Args:
            i: 节点
            p: 满足 p+1 ≡ ξ_i (mod 2) 的整数

        Returns:
            bar 不变单项式
        """
        self.datum.check_index(i)
        if (p + 1 - self.quiver.height(i)) % 2:
            raise ValueError(f"B̃_{i},{p} 违反奇偶条件: p+1 ≢ ξ_{i} (mod 2)")
        exps = {RepVertex(i, p - 1): 1, RepVertex(i, p + 1): 1}
        for j in self.datum.neighbors(i):
            exps[RepVertex(j, p)] = self.datum.c(j, i)
        return self.bar_normalize(TorusMonomial.from_map(exps))

    def kq_generator(self, i: int, l: int) -> TorusElement:
        """X_{i,l}(1 + q^{-d_i} B̃_{i,l+1}^{-1})"""
        x = self.X(i, l)
        tail = self.multiply_monomials(x, self.inverse(self.b_monomial(i, l + 1)))
        tail = tail.with_qpow2(tail.qpow2 - 2 * self.datum.sym(i))
        return TorusElement.from_terms([(x, 1), (tail, 1)])

    # ---- Q-权 ----

    def wtQ(self, monomial: TorusMonomial) -> LatticeVec:
        """Σ u_{i,p}(m)·(-1)^k·β，其中 φ_Q(i,p) = (β, k)"""
        total = LatticeVec.zero(self.datum.rank)
        for v, e in monomial.exps:
            x = self.quiver.phi(v.i, v.p)
            sign = -1 if x.level % 2 else 1
            total = total + x.root * (sign * e)
        return total

    def element_weights(self, element: TorusElement) -> List[LatticeVec]:
        return [self.wtQ(m) for m in element.monomials()]

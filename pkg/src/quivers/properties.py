"""
Dynkin箭图的组合性质检查
加性、φ_Q 双射与值域、源点反射函子性、交换类计数
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..cartan import CartanDatum, LatticeVec
from ..weyl import PhiHatElt, hasse_quiver, hat_simple_inverse, is_reduced, positive_roots, star
from .ar_quiver import ar_quiver, window_vertices
from .dynkin_quiver import DynkinQuiver, quiver_from_orientation
from .readings import longest_word

MAX_CENSUS_RANK = 6


def additive_failure(quiver: DynkinQuiver) -> Optional[Tuple[int, int]]:
    """
    加性性质的第一个反例

    对所有 i 与 0 ≤ l ≤ h 检查
    τ^l γ_i + τ^{l+1} γ_i = Σ_{d(i,j)=1} (-<h_j, α_i>) τ^{l+(ξ_j-ξ_i+1)/2} γ_j。

    Returns:
        第一个失败的 (i, l)，全部成立时返回 None
    """
    datum = quiver.datum
    for i in datum.I:
        for l in range(datum.h + 1):
            lhs = quiver.tau_gamma(i, l) + quiver.tau_gamma(i, l + 1)
            rhs = LatticeVec.zero(datum.rank)
            for j in datum.neighbors(i):
                shift = (quiver.height(j) - quiver.height(i) + 1) // 2
                rhs = rhs + (-datum.c(j, i)) * quiver.tau_gamma(j, l + shift)
            if lhs != rhs:
                return i, l
    return None


def check_additive(quiver: DynkinQuiver) -> bool:
    return additive_failure(quiver) is None


def bijection_failure(quiver: DynkinQuiver, factor: int = 2) -> Optional[str]:
    """
    在窗口 p ∈ [ξ_i - factor·h, ξ_i + factor·h] 上检查 φ_Q

    依次检查：单射性、phi_inverse∘phi = id、层数为0当且仅当顶点在AR值域内、
    φ(i*, p ± h) = (β, k ± 1)、ŵ 的 h + ξ_{i*} - ξ_i 为偶数。

    Returns:
        第一个反例的描述，全部成立时返回 None
    """
    datum = quiver.datum
    h = datum.h
    seen: Dict[Tuple[Tuple[int, ...], int], Tuple[int, int]] = {}
    for i in datum.I:
        i_star = star(datum, i)
        if (h + quiver.height(i_star) - quiver.height(i)) % 2:
            return f"h + ξ_{i_star} - ξ_{i} 为奇数"
        top = quiver.height(i)
        for p in range(top - factor * h, top + factor * h + 1, 2):
            x = quiver.phi(i, p)
            key = (x.root.coords, x.level)
            if key in seen:
                return f"φ({i},{p}) = φ{seen[key]} = {x}"
            seen[key] = (i, p)
            if quiver.phi_inverse(x) != (i, p):
                return f"phi_inverse(φ({i},{p})) = {quiver.phi_inverse(x)}"
            if (x.level == 0) != quiver.in_ar_range(i, p):
                return f"φ({i},{p}) = {x} 与AR值域不符"
            for sign in (1, -1):
                shifted = quiver.phi(i_star, p + sign * h)
                if shifted != x.shift(sign):
                    return f"φ({i_star},{p + sign * h}) = {shifted}，期望 {x.shift(sign)}"
    return None


def functoriality_failure(quiver: DynkinQuiver, i: int, lo: int, hi: int) -> Optional[str]:
    """源点 i 处 φ_{s_iQ} = ŝ_i^{-1} ∘ φ_Q 在窗口上的反例"""
    reflected = quiver.reflect(i)
    for v in window_vertices(quiver, lo, hi):
        expected = hat_simple_inverse(quiver.datum, i, quiver.phi(v.i, v.p))
        actual = reflected.phi(v.i, v.p)
        if actual != expected:
            return f"顶点 {v}: φ_(s_iQ) = {actual}，ŝ_i^-1 φ_Q = {expected}"
    return None


def check_reflection_functoriality(quiver: DynkinQuiver, i: int, lo: int, hi: int) -> bool:
    return functoriality_failure(quiver, i, lo, hi) is None


def quiver_iso_failure(quiver: DynkinQuiver) -> Optional[str]:
    """相容读法给出 w_0 的约化词，且 Γ_Q 与 Υ_[Q] 作为带标签箭图相同"""
    datum = quiver.datum
    word = longest_word(quiver)
    if len(word) != len(positive_roots(datum)) or not is_reduced(datum, word):
        return f"相容读法 {word} 不是 w_0 的约化词"
    gamma = ar_quiver(quiver)
    for v, x in zip(gamma.vertices, hasse_quiver(datum, word).vertices):
        if gamma.labels[v].root != x:
            return f"顶点 {v} 的标签 {gamma.labels[v]} 与 β = {x} 不符"
    if gamma.labeled_key() != hasse_quiver(datum, word).labeled_key():
        return "Γ_Q 与 Υ_[Q] 不同构"
    return None


@dataclass
class CensusResult:
    """交换类计数结果"""
    orientations: int
    classes: int
    rigid: bool
    classes_by_key: Dict = field(default_factory=dict, repr=False)

    @property
    def expected(self) -> int:
        return self.orientations


def census(datum: CartanDatum) -> CensusResult:
    """
    枚举全部 2^{n-1} 个定向并按Hasse箭图分类

    Args:
        datum: 秩不超过 MAX_CENSUS_RANK 的Cartan数据

    Returns:
        CensusResult，rigid 表示同一交换类的高度函数只差常数
    """
    if datum.rank > MAX_CENSUS_RANK:
        raise ValueError(f"秩 {datum.rank} 过大，交换类计数只支持秩 ≤ {MAX_CENSUS_RANK}")
    orientations = 2 ** len(datum.edges())
    classes: Dict = {}
    for bits in range(orientations):
        quiver = quiver_from_orientation(datum, bits)
        key = hasse_quiver(datum, longest_word(quiver)).labeled_key()
        classes.setdefault(key, []).append(quiver.xi)
    rigid = True
    for members in classes.values():
        first = members[0]
        for xi in members[1:]:
            if len({a - b for a, b in zip(xi, first)}) != 1:
                rigid = False
    return CensusResult(orientations, len(classes), rigid, classes)


def class_census(datum: CartanDatum) -> int:
    """不同交换类 [Q] 的个数，应为 2^{n-1}"""
    return census(datum).classes

"""
量子环面上的交换性定理
"""

from fractions import Fraction
from typing import Iterator, Optional, Tuple

from ..cartan import bilinear, fundamental_weight
from ..quivers import DynkinQuiver, RepVertex, window_vertices
from .nform import n_via_roots
from .torus import QuantumTorus


def calN_failure(torus: QuantumTorus, lo: int, hi: int) -> Optional[str]:
    """窗口内所有顶点对上 n_via_roots 与 n_pairing 一致"""
    quiver = torus.quiver
    vertices = window_vertices(quiver, lo, hi)
    for a in vertices:
        for b in vertices:
            expected = torus.pairing(a, b)
            value = n_via_roots(quiver, a, b)
            if value != expected:
                return f"ξ={list(quiver.xi)}: N{a}{b} = {expected}，根公式给出 {value}"
    return None


def _tau_weight(quiver: DynkinQuiver, i: int, m: int):
    return quiver.tau_power(m, fundamental_weight(quiver.datum, i))


def nnkr_rhs(quiver: DynkinQuiver, i: int, p: int, p_end: int, j: int, s: int, s_end: int):
    """(τ^{(ξ_i-p)/2+1}ϖ_i + τ^{(ξ_i-p′)/2}ϖ_i, τ^{(ξ_j-s)/2+1}ϖ_j - τ^{(ξ_j-s′)/2}ϖ_j)"""
    xi_i, xi_j = quiver.height(i), quiver.height(j)
    left = _tau_weight(quiver, i, (xi_i - p) // 2 + 1) + _tau_weight(quiver, i, (xi_i - p_end) // 2)
    right = _tau_weight(quiver, j, (xi_j - s) // 2 + 1) - _tau_weight(quiver, j, (xi_j - s_end) // 2)
    return bilinear(quiver.datum, left, right)


def check_nnkr(torus: QuantumTorus, i: int, p: int, p_end: int, j: int, s: int, s_end: int) -> bool:
    """
    区间单项式的 N 值公式

    Args:
        torus: 量子环面
        i, p, p_end: 第一个区间 m^{(i)}[p, p_end]
        j, s, s_end: 第二个区间 m^{(j)}[s, s_end]

    Returns:
        N(m^{(i)}[p,p′], m^{(j)}[s,s′]) 是否等于权的配对
    """
    dist = torus.datum.distance(i, j)
    if p > p_end or s > s_end:
        raise ValueError(f"区间端点非法: [{p},{p_end}], [{s},{s_end}]")
    if p - s > dist or s_end - p_end > dist:
        raise ValueError(f"需要 p-s ≤ d(i,j) 且 s′-p′ ≤ d(i,j)，当前 d(i,j) = {dist}")
    m1 = torus.interval_monomial(i, p, p_end)
    m2 = torus.interval_monomial(j, s, s_end)
    lhs = torus.n_monomials(m1, m2)
    return Fraction(lhs) == Fraction(nnkr_rhs(torus.quiver, i, p, p_end, j, s, s_end))


def nnkr_cases(torus: QuantumTorus, lo: int, hi: int) -> Iterator[Tuple[int, int, int, int, int, int]]:
    """窗口 [lo, hi] 内所有满足前提的 (i, p, p′, j, s, s′)"""
    quiver = torus.quiver
    datum = torus.datum
    points = {
        i: [p for p in range(lo, hi + 1) if (p - quiver.height(i)) % 2 == 0] for i in datum.I
    }
    for i in datum.I:
        for j in datum.I:
            dist = datum.distance(i, j)
            for p in points[i]:
                for s in points[j]:
                    if p - s > dist:
                        continue
                    for p_end in points[i]:
                        if p_end < p:
                            continue
                        for s_end in points[j]:
                            if s_end >= s and s_end - p_end <= dist:
                                yield i, p, p_end, j, s, s_end


def nnkr_failure(torus: QuantumTorus, lo: int, hi: int) -> Optional[str]:
    """窗口内第一个不满足区间单项式公式的情形"""
    for case in nnkr_cases(torus, lo, hi):
        if not check_nnkr(torus, *case):
            return f"ξ={list(torus.quiver.xi)}: (i,p,p′,j,s,s′) = {case}"
    return None


def ya_beta(torus: QuantumTorus, i: int, p: int, j: int, s: int) -> int:
    """N(X_{i,p}, B̃_{j,s}^{-1}) 的期望值"""
    if i != j:
        return 0
    norm = 2 * torus.datum.sym(i)
    if p - s == 1:
        return -norm
    if p - s == -1:
        return norm
    return 0


def ya_alpha(torus: QuantumTorus, i: int, t: int, j: int, u: int) -> int:
    """N(B̃_{i,t}^{-1}, B̃_{j,u}^{-1}) 的期望值"""
    datum = torus.datum
    if i == j:
        norm = 2 * datum.sym(i)
        if t == u + 2:
            return norm
        if t == u - 2:
            return -norm
        return 0
    if datum.distance(i, j) == 1:
        value = 2 * datum.Bsym[i - 1][j - 1]
        if t == u + 1:
            return value
        if t == u - 1:
            return -value
    return 0


def ya_failure(torus: QuantumTorus, lo: int, hi: int) -> Optional[str]:
    """
    B̃ 的交换公式与 wt_Q(B̃) = 0

    Returns:
        第一个反例，全部成立时返回 None
    """
    quiver = torus.quiver
    datum = torus.datum
    x_vertices = window_vertices(quiver, lo, hi)
    b_positions = [
        RepVertex(i, p)
        for i in datum.I
        for p in range(lo, hi + 1)
        if (p + 1 - quiver.height(i)) % 2 == 0
    ]
    b_inverse = {v: torus.inverse(torus.b_monomial(v.i, v.p)) for v in b_positions}
    for v, monomial in b_inverse.items():
        weight = torus.wtQ(monomial)
        if not weight.is_zero():
            return f"wt_Q(B̃_{v.i},{v.p}) = {weight}"
        if not torus.is_bar_invariant(torus.b_monomial(v.i, v.p)):
            return f"B̃_{v.i},{v.p} 不是 bar 不变的"
    for a in x_vertices:
        x = torus.X(a.i, a.p)
        for b, monomial in b_inverse.items():
            value = torus.n_monomials(x, monomial)
            expected = ya_beta(torus, a.i, a.p, b.i, b.p)
            if value != expected:
                return f"N(X{a}, B̃{b}^-1) = {value}，期望 {expected}"
    for a, m1 in b_inverse.items():
        for b, m2 in b_inverse.items():
            value = torus.n_monomials(m1, m2)
            expected = ya_alpha(torus, a.i, a.p, b.i, b.p)
            if value != expected:
                return f"N(B̃{a}^-1, B̃{b}^-1) = {value}，期望 {expected}"
    return None

"""
Dynkin箭图模块
高度函数、Coxeter元、γ根与双射 φ_Q
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..cartan import Basis, CartanDatum, LatticeVec, fundamental_weight, to_root_basis
from ..weyl import PhiHatElt, WeylElement, hat_element, star

HEIGHT_PRESETS = ("linear", "sink-source")


@dataclass(frozen=True)
class DynkinQuiver:
    """
    Dynkin箭图

    由高度函数 ξ 给出图的定向：ξ_i > ξ_j 时箭头 i → j。
    """
    datum: CartanDatum
    xi: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(int(x) for x in self.xi))
        if len(self.xi) != self.datum.rank:
            raise ValueError(f"高度函数长度 {len(self.xi)} 与秩 {self.datum.rank} 不一致")
        for i, j in self.datum.edges():
            if abs(self.xi[i - 1] - self.xi[j - 1]) != 1:
                raise ValueError(
                    f"高度函数 {list(self.xi)} 非法: 相邻节点 {i},{j} 的高度差必须为1"
                )

    def height(self, i: int) -> int:
        return self.xi[i - 1]

    def sources(self) -> List[int]:
        """ξ_i 大于所有相邻节点高度的节点"""
        return [
            i for i in self.datum.I
            if all(self.height(i) > self.height(j) for j in self.datum.neighbors(i))
        ]

    def sinks(self) -> List[int]:
        return [
            i for i in self.datum.I
            if all(self.height(i) < self.height(j) for j in self.datum.neighbors(i))
        ]

    def reflect(self, i: int) -> "DynkinQuiver":
        """
        在源点 i 处反射

        Args:
            i: 当前箭图的源点

        Returns:
            s_iQ，其中 i 成为汇点
        """
        self.datum.check_index(i)
        if i not in self.sources():
            raise ValueError(f"节点 {i} 不是 ξ={list(self.xi)} 的源点，无法反射")
        return DynkinQuiver(
            self.datum, tuple(x - 2 if j == i else x for j, x in zip(self.datum.I, self.xi))
        )

    def shifted(self, delta: int) -> "DynkinQuiver":
        return DynkinQuiver(self.datum, tuple(x + delta for x in self.xi))

    def coxeter_word(self) -> Tuple[int, ...]:
        """按 ξ 递减、下标递增排列的 Q-适配Coxeter词"""
        return tuple(sorted(self.datum.I, key=lambda i: (-self.height(i), i)))

    @cached_property
    def tau(self) -> WeylElement:
        return WeylElement.from_word(self.datum, self.coxeter_word())

    @cached_property
    def tau_inverse(self) -> WeylElement:
        return WeylElement.from_word(self.datum, tuple(reversed(self.coxeter_word())))

    @cached_property
    def _tau_weight_powers(self) -> Tuple[np.ndarray, ...]:
        # τ^m 的权基矩阵，m = 0..h-1
        powers = [np.array(WeylElement.identity(self.datum).weight_action, dtype=object)]
        step = self.tau.weight_matrix
        for _ in range(1, self.datum.h):
            powers.append(powers[-1].dot(step))
        return tuple(powers)

    def tau_power(self, m: int, vec: LatticeVec) -> LatticeVec:
        """τ^m vec，m 可为任意整数"""
        if vec.basis == Basis.WEIGHT:
            image = self._tau_weight_powers[m % self.datum.h].dot(np.array(vec.coords, dtype=object))
            return LatticeVec.weight(int(x) for x in image)
        result = vec
        element = self.tau if m >= 0 else self.tau_inverse
        for _ in range(abs(m) % self.datum.h):
            result = element.apply(result)
        return result

    def gamma(self, i: int) -> LatticeVec:
        """γ_i = (1 - τ)ϖ_i（根基）"""
        self.datum.check_index(i)
        return self._gammas[i - 1]

    @cached_property
    def _gammas(self) -> Tuple[LatticeVec, ...]:
        gammas = []
        for i in self.datum.I:
            weight = fundamental_weight(self.datum, i)
            gammas.append(to_root_basis(self.datum, weight - self.tau.apply(weight)))
        return tuple(gammas)

    @cached_property
    def _tau_orbits(self) -> Tuple[Tuple[LatticeVec, ...], ...]:
        orbits = []
        for i in self.datum.I:
            orbit = [self.gamma(i)]
            for _ in range(1, self.datum.h):
                orbit.append(self.tau.apply(orbit[-1]))
            orbits.append(tuple(orbit))
        return tuple(orbits)

    def tau_gamma(self, j: int, m: int) -> LatticeVec:
        """τ^m γ_j，利用 τ 的阶为 h 查表"""
        return self._tau_orbits[j - 1][m % self.datum.h]

    @cached_property
    def _hat_orbits(self) -> Tuple[Tuple[Tuple[PhiHatElt, ...], int], ...]:
        # τ̂^r(γ_i, 0)，r = 0..h-1，以及 τ̂^h 带来的层数平移
        orbits = []
        for i in self.datum.I:
            x = PhiHatElt(self.gamma(i), 0)
            orbit = [x]
            for _ in range(1, self.datum.h):
                x = hat_element(self.tau, x)
                orbit.append(x)
            period = hat_element(self.tau, x)
            orbits.append((tuple(orbit), period.level))
        return tuple(orbits)

    def check_parity(self, i: int, p: int):
        self.datum.check_index(i)
        if (p - self.height(i)) % 2:
            raise ValueError(f"顶点 ({i},{p}) 违反奇偶条件: p ≢ ξ_{i} = {self.height(i)} (mod 2)")

    def phi(self, i: int, p: int) -> PhiHatElt:
        """
        双射 φ_Q

        Args:
            i: 节点
            p: 满足 p ≡ ξ_i (mod 2) 的整数

        Returns:
            φ_Q(i, p) = τ̂^{(ξ_i - p)/2}(γ_i, 0)
        """
        self.check_parity(i, p)
        q, r = divmod((self.height(i) - p) // 2, self.datum.h)
        orbit, period_shift = self._hat_orbits[i - 1]
        return orbit[r].shift(q * period_shift)

    @cached_property
    def _phi_lookup(self) -> Dict[Tuple[Tuple[int, ...], int], Tuple[int, int, int]]:
        lookup = {}
        for i in self.datum.I:
            orbit, _ = self._hat_orbits[i - 1]
            for r, x in enumerate(orbit):
                lookup[(x.root.coords, x.level % 2)] = (i, r, x.level)
        return lookup

    def phi_inverse(self, x: PhiHatElt) -> Tuple[int, int]:
        """φ_Q 的逆，返回顶点 (i, p)"""
        if not x.root.is_positive():
            raise ValueError(f"{x.root} 不是正根")
        key = (x.root.coords, x.level % 2)
        if key not in self._phi_lookup:
            raise KeyError(f"未知的根: {list(x.root.coords)}")
        i, r, level = self._phi_lookup[key]
        _, period_shift = self._hat_orbits[i - 1]
        q = (x.level - level) // period_shift
        return i, self.height(i) - 2 * (q * self.datum.h + r)

    def in_ar_range(self, i: int, p: int) -> bool:
        """ξ_{i*} - h < p ≤ ξ_i"""
        return self.height(star(self.datum, i)) - self.datum.h < p <= self.height(i)

    def to_dict(self) -> Dict:
        return {"type": str(self.datum.ctype), "xi": list(self.xi)}


def _orient(datum: CartanDatum, root_height: int, up) -> Tuple[int, ...]:
    """沿Dynkin树做BFS，up(i, j) 为真时 ξ_j = ξ_i + 1，否则 ξ_j = ξ_i - 1"""
    xi = {1: root_height}
    queue = deque([1])
    while queue:
        i = queue.popleft()
        for j in datum.neighbors(i):
            if j not in xi:
                xi[j] = xi[i] + (1 if up(i, j) else -1)
                queue.append(j)
    return tuple(xi[i] for i in datum.I)


def linear_quiver(datum: CartanDatum) -> DynkinQuiver:
    """所有箭头 i → j (i < j)；对链状图即 ξ_i = n - i + 1"""
    return DynkinQuiver(datum, _orient(datum, datum.rank, lambda i, j: j < i))


def sink_source_quiver(datum: CartanDatum) -> DynkinQuiver:
    """ξ ∈ {0, 1}，节点1为源点"""
    return DynkinQuiver(datum, tuple((datum.distance(1, i) + 1) % 2 for i in datum.I))


def random_quiver(datum: CartanDatum, rng: Optional[np.random.Generator] = None) -> DynkinQuiver:
    """每条边随机定向，ξ_1 = 0"""
    rng = rng if rng is not None else np.random.default_rng()
    choices = {edge: bool(rng.integers(0, 2)) for edge in datum.edges()}
    return DynkinQuiver(datum, _orient(datum, 0, lambda i, j: choices[(min(i, j), max(i, j))]))


def quiver_from_orientation(datum: CartanDatum, bits: int) -> DynkinQuiver:
    """用整数的二进制位给 edges() 中的每条边定向"""
    edges = datum.edges()
    choices = {edge: bool(bits >> k & 1) for k, edge in enumerate(edges)}
    return DynkinQuiver(datum, _orient(datum, 0, lambda i, j: choices[(min(i, j), max(i, j))]))


def parse_height(datum: CartanDatum, spec: str) -> DynkinQuiver:
    """
    解析高度函数描述

    Args:
        datum: Cartan数据
        spec: 逗号分隔的整数、"linear" 或 "sink-source"

    Returns:
        DynkinQuiver对象
    """
    text = (spec or "").strip().lower()
    if text == "linear":
        return linear_quiver(datum)
    if text in ("sink-source", "sink_source"):
        return sink_source_quiver(datum)
    try:
        xi = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"无法解析高度函数: {spec!r}，可选逗号分隔整数或 {', '.join(HEIGHT_PRESETS)}"
        ) from None
    return DynkinQuiver(datum, xi)

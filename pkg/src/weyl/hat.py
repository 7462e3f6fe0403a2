"""
Φ̂⁺ = Φ⁺ × Z 上的 ŵ 作用
"""

from dataclasses import dataclass
from typing import Dict, Sequence

from ..cartan import CartanDatum, LatticeVec, simple_reflection, simple_root
from .element import WeylElement


@dataclass(frozen=True)
class PhiHatElt:
    """Φ̂⁺ 中的元素 (β, k)"""
    root: LatticeVec
    level: int

    def shift(self, delta: int) -> "PhiHatElt":
        return PhiHatElt(self.root, self.level + delta)

    def to_dict(self) -> Dict:
        return {"root": list(self.root.coords), "level": self.level}

    def __str__(self) -> str:
        return f"({list(self.root.coords)}, {self.level})"


def _check_positive(x: PhiHatElt):
    if not x.root.is_positive():
        raise ValueError(f"{x.root} 不是正根")


def hat_simple(datum: CartanDatum, i: int, x: PhiHatElt) -> PhiHatElt:
    """ŝ_i(β, k)：若 β = α_i 则为 (α_i, k-1)，否则为 (s_iβ, k)"""
    _check_positive(x)
    image = simple_reflection(datum, i, x.root)
    if image.is_positive():
        return PhiHatElt(image, x.level)
    return PhiHatElt(-image, x.level - 1)


def hat_simple_inverse(datum: CartanDatum, i: int, x: PhiHatElt) -> PhiHatElt:
    _check_positive(x)
    if x.root == simple_root(datum, i):
        return PhiHatElt(x.root, x.level + 1)
    return PhiHatElt(simple_reflection(datum, i, x.root), x.level)


def hat_action(datum: CartanDatum, word: Sequence[int], x: PhiHatElt) -> PhiHatElt:
    """
    ŵ = ŝ_{i_1}···ŝ_{i_r} 的逐字母作用

    Args:
        datum: Cartan数据
        word: 下标序列 (i_1, ..., i_r)
        x: Φ̂⁺ 中的元素

    Returns:
        ŵ(x)
    """
    for i in reversed(tuple(word)):
        x = hat_simple(datum, i, x)
    return x


def hat_inverse(datum: CartanDatum, word: Sequence[int], x: PhiHatElt) -> PhiHatElt:
    """ŵ^{-1} = ŝ_{i_r}^{-1}···ŝ_{i_1}^{-1}"""
    for i in word:
        x = hat_simple_inverse(datum, i, x)
    return x


def hat_element(w: WeylElement, x: PhiHatElt) -> PhiHatElt:
    """直接公式：wβ > 0 时为 (wβ, k)，否则为 (-wβ, k-1)"""
    _check_positive(x)
    image = w.apply(x.root)
    if image.is_positive():
        return PhiHatElt(image, x.level)
    return PhiHatElt(-image, x.level - 1)

"""
约化词工具
β序列、约化判定、最长元与星对合
"""

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..cartan import CartanDatum, LatticeVec, simple_root
from .element import WeylElement, _identity
from .roots import positive_roots

Word = Tuple[int, ...]


def parse_word(text: str) -> Word:
    """
    解析逗号分隔的下标列表

    Args:
        text: 例如 "1,2,3,1,2,3"

    Returns:
        整数元组
    """
    parts = [part.strip() for part in (text or "").split(",") if part.strip()]
    if not parts:
        raise ValueError(f"空的词: {text!r}")
    try:
        letters = tuple(int(part) for part in parts)
    except ValueError:
        raise ValueError(f"无法解析词: {text!r}，示例: 1,2,3,1") from None
    if any(letter < 1 for letter in letters):
        raise ValueError(f"词中的下标必须为正整数: {text!r}")
    return letters


def check_word(datum: CartanDatum, word: Sequence[int]):
    for letter in word:
        datum.check_index(letter)


def beta_sequence(datum: CartanDatum, word: Sequence[int]) -> Tuple[List[LatticeVec], bool]:
    """
    β_k = s_{i_1}···s_{i_{k-1}}(α_{i_k})

    Args:
        datum: Cartan数据
        word: 任意下标序列

    Returns:
        (β序列, 是否约化)，约化当且仅当所有 β_k 为正且两两不同
    """
    check_word(datum, word)
    prefix = _identity(datum.rank)
    betas = []
    for i in word:
        column = prefix[:, i - 1]
        betas.append(LatticeVec.root(int(x) for x in column))
        # prefix·s_i 只改变第 i 列
        prefix = prefix - np.outer(column, np.array(datum.C[i - 1], dtype=object))
    reduced = all(beta.is_positive() for beta in betas) and len({b.coords for b in betas}) == len(betas)
    return betas, reduced


def is_reduced(datum: CartanDatum, word: Sequence[int]) -> bool:
    return beta_sequence(datum, word)[1]


def length_of(datum: CartanDatum, word: Sequence[int]) -> int:
    """ℓ(w) = #{β ∈ Φ⁺ : wβ < 0}"""
    element = WeylElement.from_word(datum, word)
    return sum(1 for root in positive_roots(datum) if element.apply(root).is_negative())


@lru_cache(maxsize=None)
def greedy_longest_word(datum: CartanDatum) -> Word:
    """贪心地右乘 s_i 直到 w(α_i) 全为负，得到 w_0 的一个约化词"""
    word = []
    element = WeylElement.identity(datum)
    while True:
        for i in datum.I:
            if element.apply(simple_root(datum, i)).is_positive():
                word.append(i)
                element = element.compose(WeylElement.simple(datum, i))
                break
        else:
            return tuple(word)


@lru_cache(maxsize=None)
def longest_element(datum: CartanDatum) -> WeylElement:
    return WeylElement.from_word(datum, greedy_longest_word(datum))


@lru_cache(maxsize=None)
def _star(datum: CartanDatum) -> Tuple[int, ...]:
    w0 = longest_element(datum)
    images = []
    for i in datum.I:
        image = -w0.apply(simple_root(datum, i))
        images.append(image.coords.index(1) + 1)
    return tuple(images)


def star_involution(datum: CartanDatum) -> Dict[int, int]:
    """
    星对合 i ↦ i*

    Args:
        datum: Cartan数据

    Returns:
        满足 w_0(α_i) = -α_{i*} 的映射
    """
    return {i: image for i, image in zip(datum.I, _star(datum))}


def star(datum: CartanDatum, i: int) -> int:
    return _star(datum)[i - 1]


def residues(datum: CartanDatum, word: Sequence[int]) -> Dict[Tuple[int, ...], int]:
    """
    约化词的留数映射

    Args:
        datum: Cartan数据
        word: w_0 的约化词

    Returns:
        正根坐标 -> 该根在词中对应的字母
    """
    betas, reduced = beta_sequence(datum, word)
    if not reduced:
        raise ValueError(f"词 {tuple(word)} 不是约化词")
    return {beta.coords: letter for beta, letter in zip(betas, word)}

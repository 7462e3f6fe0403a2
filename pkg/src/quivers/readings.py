"""
Q-适配序列与相容读法
"""

from collections import Counter
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .ar_quiver import RepVertex, ar_vertices
from .dynkin_quiver import DynkinQuiver


def first_non_adapted(quiver: DynkinQuiver, word: Sequence[int]) -> Optional[int]:
    """
    检查序列的 Q-适配性

    Args:
        quiver: Dynkin箭图
        word: 下标序列

    Returns:
        第一个不是 s_{i_{k-1}}···s_{i_1}Q 源点的位置（0起始）；全部适配时返回 None
    """
    current = quiver
    for k, letter in enumerate(word):
        quiver.datum.check_index(letter)
        if letter not in current.sources():
            return k
        current = current.reflect(letter)
    return None


def is_adapted(quiver: DynkinQuiver, word: Sequence[int]) -> bool:
    return first_non_adapted(quiver, word) is None


def adapted_positions(quiver: DynkinQuiver, word: Sequence[int]) -> List[RepVertex]:
    """p_k = ξ_{i_k} - 2·#{s < k : i_s = i_k}"""
    offending = first_non_adapted(quiver, word)
    if offending is not None:
        raise ValueError(
            f"序列 {tuple(word)} 不是 Q-适配的: 第 {offending + 1} 个字母 {word[offending]} 不是源点"
        )
    seen: Counter = Counter()
    positions = []
    for letter in word:
        positions.append(RepVertex(letter, quiver.height(letter) - 2 * seen[letter]))
        seen[letter] += 1
    return positions


def compatible_reading(quiver: DynkinQuiver) -> List[RepVertex]:
    """Γ_Q 顶点的相容读法：p 递减，同层按 i 递增"""
    return ar_vertices(quiver)


def reading_word(vertices: Sequence[RepVertex]) -> Tuple[int, ...]:
    return tuple(v.i for v in vertices)


def longest_word(quiver: DynkinQuiver) -> Tuple[int, ...]:
    """
    由相容读法得到的 w_0 的 Q-适配约化词

    Args:
        quiver: Dynkin箭图

    Returns:
        长度为 |Φ⁺| 的词
    """
    return reading_word(compatible_reading(quiver))


def source_cycle_word(quiver: DynkinQuiver, length: int) -> Tuple[int, ...]:
    """反复取当前箭图的最小源点得到的适配序列"""
    word = []
    current = quiver
    for _ in range(length):
        letter = min(current.sources())
        word.append(letter)
        current = current.reflect(letter)
    return tuple(word)


def random_adapted_word(
    quiver: DynkinQuiver, length: int, rng: Optional[np.random.Generator] = None
) -> Tuple[int, ...]:
    """每一步在当前源点中随机选取"""
    rng = rng if rng is not None else np.random.default_rng()
    word = []
    current = quiver
    for _ in range(length):
        sources = current.sources()
        letter = sources[int(rng.integers(0, len(sources)))]
        word.append(letter)
        current = current.reflect(letter)
    return tuple(word)

"""
下标序列的 k⁺、k⁻ 与 J_f、J_e
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from ..cartan import CartanDatum


@dataclass(frozen=True)
class SequenceIndex:
    """
    下标序列 w̃ = (i_1, ..., i_r) 的索引数据

    k⁺ 为 k 之后第一次出现 i_k 的位置，不存在时为 r+1；
    k⁻ 为 k 之前最后一次出现 i_k 的位置，不存在时为0。
    位置从1开始。有限前缀上的 k⁺ 只相对该前缀计算。
    """
    word: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))

    @property
    def r(self) -> int:
        return len(self.word)

    def letter(self, k: int) -> int:
        return self.word[k - 1]

    @cached_property
    def _plus(self) -> Dict[int, int]:
        plus = {}
        following: Dict[int, int] = {}
        for k in range(self.r, 0, -1):
            letter = self.letter(k)
            plus[k] = following.get(letter, self.r + 1)
            following[letter] = k
        return plus

    @cached_property
    def _minus(self) -> Dict[int, int]:
        minus = {}
        previous: Dict[int, int] = {}
        for k in range(1, self.r + 1):
            letter = self.letter(k)
            minus[k] = previous.get(letter, 0)
            previous[letter] = k
        return minus

    def kplus(self, k: int) -> int:
        return self._plus[k]

    def kminus(self, k: int) -> int:
        return self._minus[k]

    @property
    def J(self) -> List[int]:
        return list(range(1, self.r + 1))

    @property
    def Jf(self) -> List[int]:
        """冻结指标：k⁺ = r+1"""
        return [k for k in self.J if self.kplus(k) == self.r + 1]

    @property
    def Je(self) -> List[int]:
        """可交换指标"""
        return [k for k in self.J if self.kplus(k) <= self.r]

    def check(self, datum: CartanDatum):
        for letter in self.word:
            datum.check_index(letter)


def sequence_index(word: Sequence[int]) -> SequenceIndex:
    return SequenceIndex(tuple(word))

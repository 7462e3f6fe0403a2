"""
Weyl群元素
以权基与根基上的整数作用矩阵表示
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
import sympy

from ..cartan import Basis, CartanDatum, LatticeVec


def _as_tuple(matrix: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in matrix)


def _identity(n: int) -> np.ndarray:
    return np.array([[int(r == c) for c in range(n)] for r in range(n)], dtype=object)


def _weight_reflection(datum: CartanDatum, i: int) -> np.ndarray:
    # s_i λ = λ - λ_i·C[:, i]
    matrix = _identity(datum.rank)
    for r in range(datum.rank):
        matrix[r, i - 1] -= datum.C[r][i - 1]
    return matrix


def _root_reflection(datum: CartanDatum, i: int) -> np.ndarray:
    # s_i β = β - <h_i, β> e_i
    matrix = _identity(datum.rank)
    for c in range(datum.rank):
        matrix[i - 1, c] -= datum.C[i - 1][c]
    return matrix


@dataclass(frozen=True)
class WeylElement:
    """
    Weyl群元素

    weight_action 与 root_action 分别是该元素在权基坐标与根基坐标上的矩阵，
    相等性与作用都只依赖矩阵。
    """
    datum: CartanDatum
    weight_action: Tuple[Tuple[int, ...], ...]
    root_action: Tuple[Tuple[int, ...], ...]

    @classmethod
    def identity(cls, datum: CartanDatum) -> "WeylElement":
        eye = _as_tuple(_identity(datum.rank))
        return cls(datum, eye, eye)

    @classmethod
    def simple(cls, datum: CartanDatum, i: int) -> "WeylElement":
        datum.check_index(i)
        return cls(
            datum,
            _as_tuple(_weight_reflection(datum, i)),
            _as_tuple(_root_reflection(datum, i)),
        )

    @classmethod
    def from_word(cls, datum: CartanDatum, word: Sequence[int]) -> "WeylElement":
        """s_{i_1} s_{i_2} ··· s_{i_l}"""
        weight = _identity(datum.rank)
        root = _identity(datum.rank)
        for i in word:
            datum.check_index(i)
            weight = weight.dot(_weight_reflection(datum, i))
            root = root.dot(_root_reflection(datum, i))
        return cls(datum, _as_tuple(weight), _as_tuple(root))

    @property
    def weight_matrix(self) -> np.ndarray:
        return np.array(self.weight_action, dtype=object)

    @property
    def root_matrix(self) -> np.ndarray:
        return np.array(self.root_action, dtype=object)

    def apply(self, vec: LatticeVec) -> LatticeVec:
        """作用在向量上，保持向量原来的基"""
        if vec.dim != self.datum.rank:
            raise ValueError(f"向量维数 {vec.dim} 与秩 {self.datum.rank} 不一致")
        matrix = self.weight_matrix if vec.basis == Basis.WEIGHT else self.root_matrix
        image = matrix.dot(np.array(vec.coords, dtype=object))
        return LatticeVec(vec.basis, tuple(int(x) for x in image))

    def __call__(self, vec: LatticeVec) -> LatticeVec:
        return self.apply(vec)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self ∘ other"""
        if self.datum != other.datum:
            raise ValueError("不同Cartan数据上的Weyl群元素不能复合")
        return WeylElement(
            self.datum,
            _as_tuple(self.weight_matrix.dot(other.weight_matrix)),
            _as_tuple(self.root_matrix.dot(other.root_matrix)),
        )

    __mul__ = compose

    def inverse(self) -> "WeylElement":
        weight = sympy.Matrix(self.weight_action).inv()
        root = sympy.Matrix(self.root_action).inv()
        return WeylElement(
            self.datum,
            tuple(tuple(int(x) for x in weight.row(r)) for r in range(self.datum.rank)),
            tuple(tuple(int(x) for x in root.row(r)) for r in range(self.datum.rank)),
        )

    def power(self, m: int) -> "WeylElement":
        base = self if m >= 0 else self.inverse()
        result = WeylElement.identity(self.datum)
        for _ in range(abs(m)):
            result = result.compose(base)
        return result

    def is_identity(self) -> bool:
        return self == WeylElement.identity(self.datum)

    def order(self, bound: int = 1000) -> int:
        """元素的阶"""
        current = self
        for k in range(1, bound + 1):
            if current.is_identity():
                return k
            current = current.compose(self)
        raise ValueError(f"元素的阶超过上界 {bound}")

    def negates_roots(self) -> bool:
        """是否等于 -1"""
        n = self.datum.rank
        return all(
            self.root_action[r][c] == (-1 if r == c else 0) for r in range(n) for c in range(n)
        )

"""
格向量模块
权基/根基下的精确整数坐标向量、双线性型与单反射
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from .datum import CartanDatum


class Basis(str, Enum):
    """坐标基"""
    WEIGHT = "weight"
    ROOT = "root"


@dataclass(frozen=True)
class LatticeVec:
    """
    精确整数坐标向量

    权基坐标为 <h_i, λ>，根基坐标为单根系数。
    """
    basis: Basis
    coords: Tuple[int, ...]

    @classmethod
    def root(cls, coords: Iterable[int]) -> "LatticeVec":
        return cls(Basis.ROOT, tuple(int(c) for c in coords))

    @classmethod
    def weight(cls, coords: Iterable[int]) -> "LatticeVec":
        return cls(Basis.WEIGHT, tuple(int(c) for c in coords))

    @classmethod
    def zero(cls, n: int, basis: Basis = Basis.ROOT) -> "LatticeVec":
        return cls(basis, (0,) * n)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check_same(self, other: "LatticeVec"):
        if self.basis != other.basis:
            raise ValueError(f"坐标基不一致: {self.basis.value} 与 {other.basis.value}")
        if self.dim != other.dim:
            raise ValueError(f"维数不一致: {self.dim} 与 {other.dim}")

    def __add__(self, other: "LatticeVec") -> "LatticeVec":
        self._check_same(other)
        return LatticeVec(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVec") -> "LatticeVec":
        self._check_same(other)
        return LatticeVec(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVec":
        return LatticeVec(self.basis, tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "LatticeVec":
        return LatticeVec(self.basis, tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self) -> bool:
        """非零且所有系数非负（根基下即正根判定）"""
        return not self.is_zero() and all(c >= 0 for c in self.coords)

    def is_negative(self) -> bool:
        return not self.is_zero() and all(c <= 0 for c in self.coords)

    def to_dict(self) -> Dict:
        return {"basis": self.basis.value, "coords": list(self.coords)}

    @classmethod
    def from_dict(cls, data: Dict) -> "LatticeVec":
        return cls(Basis(data["basis"]), tuple(int(c) for c in data["coords"]))

    def __str__(self) -> str:
        return f"{self.basis.value}{list(self.coords)}"


def _check_dim(datum: CartanDatum, *vectors: LatticeVec):
    for vec in vectors:
        if vec.dim != datum.rank:
            raise ValueError(f"向量维数 {vec.dim} 与 {datum.ctype} 的秩 {datum.rank} 不一致")


def simple_root(datum: CartanDatum, i: int, basis: Basis = Basis.ROOT) -> LatticeVec:
    """单根 α_i"""
    datum.check_index(i)
    if basis == Basis.ROOT:
        return LatticeVec.root(int(j == i) for j in datum.I)
    # 权基坐标为 C 的第 i 列
    return LatticeVec.weight(datum.c(j, i) for j in datum.I)


def fundamental_weight(datum: CartanDatum, i: int) -> LatticeVec:
    """基本权 ϖ_i（权基）"""
    datum.check_index(i)
    return LatticeVec.weight(int(j == i) for j in datum.I)


def pairing(datum: CartanDatum, i: int, vec: LatticeVec) -> int:
    """<h_i, vec>"""
    _check_dim(datum, vec)
    if vec.basis == Basis.WEIGHT:
        return vec.coords[i - 1]
    return sum(c * x for c, x in zip(datum.C[i - 1], vec.coords))


def to_weight_basis(datum: CartanDatum, vec: LatticeVec) -> LatticeVec:
    """根基 -> 权基"""
    _check_dim(datum, vec)
    if vec.basis == Basis.WEIGHT:
        return vec
    return LatticeVec.weight(pairing(datum, i, vec) for i in datum.I)


def to_root_basis(datum: CartanDatum, vec: LatticeVec) -> LatticeVec:
    """
    权基 -> 根基

    Args:
        datum: Cartan数据
        vec: 权基向量，须落在根格中

    Returns:
        根基向量
    """
    _check_dim(datum, vec)
    if vec.basis == Basis.ROOT:
        return vec
    coords = []
    for row in datum.cartan_inverse:
        value = sum((entry * x for entry, x in zip(row, vec.coords)), Fraction(0))
        if value.denominator != 1:
            raise ValueError(f"{vec} 不在根格中（根基系数 {value} 非整数）")
        coords.append(int(value))
    return LatticeVec.root(coords)


def rational_root_coords(datum: CartanDatum, vec: LatticeVec) -> Tuple[Fraction, ...]:
    """任意向量的有理根基系数"""
    _check_dim(datum, vec)
    if vec.basis == Basis.ROOT:
        return tuple(Fraction(c) for c in vec.coords)
    return tuple(
        sum((entry * x for entry, x in zip(row, vec.coords)), Fraction(0))
        for row in datum.cartan_inverse
    )


def bilinear(datum: CartanDatum, x: LatticeVec, y: LatticeVec) -> Union[int, Fraction]:
    """
    对称双线性型 (x, y)

    Args:
        datum: Cartan数据
        x, y: 任意基下的向量

    Returns:
        任一参数在根格中时为整数，否则为有理数
    """
    _check_dim(datum, x, y)
    if x.basis == Basis.ROOT and y.basis == Basis.ROOT:
        return sum(
            a * datum.Bsym[r][c] * b
            for r, a in enumerate(x.coords) if a
            for c, b in enumerate(y.coords) if b
        )
    if x.basis == Basis.WEIGHT and y.basis == Basis.WEIGHT:
        # (λ, μ) = Σ_j c_j d_j μ_j，其中 λ = Σ c_j α_j
        value = sum(
            (c * d * m for c, d, m in zip(rational_root_coords(datum, x), datum.d, y.coords)),
            Fraction(0),
        )
        return int(value) if value.denominator == 1 else value
    weight, root = (x, y) if x.basis == Basis.WEIGHT else (y, x)
    # (λ, α_j) = d_j <h_j, λ>
    return sum(d * lam * b for d, lam, b in zip(datum.d, weight.coords, root.coords))


def simple_reflection(datum: CartanDatum, i: int, vec: LatticeVec) -> LatticeVec:
    """s_i λ = λ - <h_i, λ> α_i，在向量自身的基下计算"""
    datum.check_index(i)
    _check_dim(datum, vec)
    value = pairing(datum, i, vec)
    if value == 0:
        return vec
    return vec - value * simple_root(datum, i, vec.basis)

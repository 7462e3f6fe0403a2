"""
环面单项式与环面元素
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from ..quivers import RepVertex


def normal_key(vertex: RepVertex) -> Tuple[int, int]:
    """正规序：p 递增，同层按 i 递增"""
    return vertex.p, vertex.i


@dataclass(frozen=True)
class TorusMonomial:
    """
    q^{qpow2/2} · Π X_{i,p}^{e}，因子按正规序排列

    qpow2 为 q 的指数的两倍，exps 不含零指数。
    """
    qpow2: int
    exps: Tuple[Tuple[RepVertex, int], ...]

    @classmethod
    def from_map(cls, exps: Mapping[RepVertex, int], qpow2: int = 0) -> "TorusMonomial":
        items = [(v, int(e)) for v, e in exps.items() if e]
        return cls(int(qpow2), tuple(sorted(items, key=lambda item: normal_key(item[0]))))

    @classmethod
    def one(cls) -> "TorusMonomial":
        return cls(0, ())

    @property
    def exp_map(self) -> Dict[RepVertex, int]:
        return dict(self.exps)

    @property
    def qpow(self) -> Fraction:
        return Fraction(self.qpow2, 2)

    def exponent(self, i: int, p: int) -> int:
        return self.exp_map.get(RepVertex(i, p), 0)

    def with_qpow2(self, qpow2: int) -> "TorusMonomial":
        return TorusMonomial(qpow2, self.exps)

    def same_variables(self, other: "TorusMonomial") -> bool:
        return self.exps == other.exps

    def to_dict(self) -> Dict:
        return {
            "qpow": str(self.qpow),
            "exps": [[v.i, v.p, e] for v, e in self.exps],
        }


@dataclass(frozen=True)
class TorusElement:
    """
    整系数的单项式有限和

    terms 按 (变量, q 指数) 排序，相同单项式已合并，不含零系数。
    """
    terms: Tuple[Tuple[TorusMonomial, int], ...]

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[TorusMonomial, int]]) -> "TorusElement":
        merged: Dict[TorusMonomial, int] = {}
        for monomial, coefficient in terms:
            merged[monomial] = merged.get(monomial, 0) + int(coefficient)
        items = [(m, c) for m, c in merged.items() if c]
        items.sort(key=lambda item: (_variables_key(item[0]), item[0].qpow2))
        return cls(tuple(items))

    @classmethod
    def of(cls, monomial: TorusMonomial, coefficient: int = 1) -> "TorusElement":
        return cls.from_terms([(monomial, coefficient)])

    @classmethod
    def zero(cls) -> "TorusElement":
        return cls(())

    def __add__(self, other: "TorusElement") -> "TorusElement":
        return TorusElement.from_terms(list(self.terms) + list(other.terms))

    def __neg__(self) -> "TorusElement":
        return TorusElement(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def monomials(self) -> List[TorusMonomial]:
        return [m for m, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def to_dict(self) -> Dict:
        return {"terms": [{"coefficient": c, **m.to_dict()} for m, c in self.terms]}


def _variables_key(monomial: TorusMonomial):
    return tuple((normal_key(v), e) for v, e in monomial.exps)

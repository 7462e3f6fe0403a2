"""
稀疏Laurent多项式
指数为整数，系数为精确有理数
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

import sympy

Number = Union[int, Fraction]


class LaurentPoly:
    """单变量Laurent多项式，只存储非零系数"""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Dict[int, Number], Iterable[Tuple[int, Number]]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        merged: Dict[int, Fraction] = {}
        for exponent, coefficient in items:
            merged[int(exponent)] = merged.get(int(exponent), Fraction(0)) + Fraction(coefficient)
        self.terms = tuple(sorted((e, c) for e, c in merged.items() if c != 0))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Number = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: Number) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Number], start: int = 0) -> "LaurentPoly":
        """系数列表，第 k 项对应 t^{start+k}"""
        return cls((start + k, c) for k, c in enumerate(coefficients))

    @classmethod
    def quantum_integer(cls, k: int, power: int = 1) -> "LaurentPoly":
        """
        量子整数 [k]_x，其中 x = t^power

        Args:
            k: 非负整数
            power: 变量的指数倍数

        Returns:
            x^{k-1} + x^{k-3} + ... + x^{1-k}
        """
        if k < 0:
            raise ValueError(f"量子整数要求 k ≥ 0，收到 {k}")
        return cls((power * (k - 1 - 2 * s), 1) for s in range(k))

    def __hash__(self):
        return hash(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> Fraction:
        return self.as_dict().get(exponent, Fraction(0))

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("零多项式没有次数")
        return self.terms[-1][0]

    @property
    def low_degree(self) -> int:
        if not self.terms:
            raise ValueError("零多项式没有最低次数")
        return self.terms[0][0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.terms)

    def is_polynomial(self) -> bool:
        return not self.terms or self.low_degree >= 0

    def coefficient_list(self, length: int, start: int = 0) -> List[Number]:
        """t^{start}..t^{start+length-1} 的系数，整数系数以 int 返回"""
        values = self.as_dict()
        result = []
        for k in range(length):
            c = values.get(start + k, Fraction(0))
            result.append(int(c) if c.denominator == 1 else c)
        return result

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        raise TypeError(f"不支持与 {type(other).__name__} 运算")

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPoly(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        product: Dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, Fraction(0)) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("只有单项式可以取负次幂")
            (e, c), = self.terms
            return LaurentPoly({-e * (-k): Fraction(1) / c ** (-k)})
        result = LaurentPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, value: Number) -> "LaurentPoly":
        return LaurentPoly((e, c * value) for e, c in self.terms)

    def shift(self, k: int) -> "LaurentPoly":
        """乘以 t^k"""
        return LaurentPoly((e + k, c) for e, c in self.terms)

    def invert_variable(self) -> "LaurentPoly":
        """t ↦ t^{-1}"""
        return LaurentPoly((-e, c) for e, c in self.terms)

    def evaluate(self, value: Number) -> Fraction:
        value = Fraction(value)
        return sum((c * value ** e for e, c in self.terms), Fraction(0))

    def to_sympy(self, symbol: sympy.Symbol) -> sympy.Expr:
        return sum(
            (sympy.Rational(c.numerator, c.denominator) * symbol ** e for e, c in self.terms),
            sympy.Integer(0),
        )

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, symbol: sympy.Symbol) -> "LaurentPoly":
        """把 symbol 的Laurent多项式表达式转回 LaurentPoly"""
        expr = sympy.expand(expr)
        terms = []
        for term in sympy.Add.make_args(expr):
            coefficient, exponent = term.as_coeff_exponent(symbol)
            if coefficient.free_symbols:
                raise ValueError(f"表达式 {expr} 不是 {symbol} 的Laurent多项式")
            rational = sympy.Rational(coefficient)
            terms.append((int(exponent), Fraction(int(rational.p), int(rational.q))))
        return cls(terms)

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                body = str(c)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if c == 1 else ("-" + power if c == -1 else f"{c}*{power}")
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()

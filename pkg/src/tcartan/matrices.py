"""
(q,t)-Cartan矩阵及其特化
"""

from fractions import Fraction
from typing import List

import sympy

from ..cartan import CartanDatum
from .laurent import LaurentPoly

q, t = sympy.symbols("q t")

PolyMatrix = List[List[LaurentPoly]]


def _quantum_integer(k: int, x: sympy.Expr) -> sympy.Expr:
    return sum((x ** (k - 1 - 2 * s) for s in range(k)), sympy.Integer(0))


def qt_cartan(datum: CartanDatum) -> sympy.Matrix:
    """
    (q,t)-Cartan矩阵

    c_{ij}(q,t) = (q_i t^{-1} + q_i^{-1} t)δ(i=j) - [I_{ij}]_q，其中 q_i = q^{d_i}，
    I_{ij} = -c_{ij}（i ≠ j）。

    Args:
        datum: Cartan数据

    Returns:
        sympy矩阵，元素为 q, t 的Laurent多项式
    """
    n = datum.rank
    rows = []
    for i in datum.I:
        row = []
        for j in datum.I:
            if i == j:
                qi = q ** datum.sym(i)
                row.append(qi / t + t / qi)
            else:
                row.append(-_quantum_integer(-datum.c(i, j), q))
        rows.append(row)
    return sympy.Matrix(n, n, lambda r, c: rows[r][c])


def quantum_cartan(datum: CartanDatum) -> sympy.Matrix:
    """量子Cartan矩阵 C(q) = C(q, 1)"""
    return qt_cartan(datum).subs(t, 1).applyfunc(sympy.expand)


def t_cartan(datum: CartanDatum) -> PolyMatrix:
    """t-量子化Cartan矩阵 C(t) = C(1, t)"""
    return [
        [
            LaurentPoly({1: 1, -1: 1}) if i == j else LaurentPoly.constant(datum.c(i, j))
            for j in datum.I
        ]
        for i in datum.I
    ]


def b_matrix(datum: CartanDatum) -> PolyMatrix:
    """B(t) = C(t)·D^{-1}"""
    c_t = t_cartan(datum)
    return [
        [c_t[i - 1][j - 1].scale(Fraction(1, datum.sym(j))) for j in datum.I]
        for i in datum.I
    ]


def bbar_matrix(datum: CartanDatum) -> PolyMatrix:
    """B̄(t) = D·C(t)"""
    c_t = t_cartan(datum)
    return [[c_t[i - 1][j - 1].scale(datum.sym(i)) for j in datum.I] for i in datum.I]


def to_sympy_matrix(matrix: PolyMatrix) -> sympy.Matrix:
    n = len(matrix)
    return sympy.Matrix(n, n, lambda r, c: matrix[r][c].to_sympy(t))

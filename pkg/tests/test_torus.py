"""
量子环面：N 型、乘法、bar 对合与交换性定理
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cartan import LatticeVec
from src.quivers import RepVertex
from src.torus import (
    QuantumTorus,
    TorusElement,
    TorusMonomial,
    calN_failure,
    check_nnkr,
    format_element,
    n_via_roots,
    nnkr_cases,
    nnkr_failure,
    parse_element,
    ya_beta,
    ya_failure,
)

SEVEN_TERMS = (
    "q*X[1,1] + q*X[2,2]*X[1,3]^-1 + q^2*X[3,3]^2*X[2,4]^-1"
    " + q^-1*X[3,3]*X[3,5]^-1 + q*X[3,3]*X[3,5]^-1"
    " + q^2*X[2,4]*X[3,5]^-2 + q*X[1,5]*X[2,6]^-1 + q^-1*X[1,7]^-1"
)

B3_HEIGHTS = {1: 3, 2: 2, 3: 1}


@st.composite
def b3_monomials(draw):
    """ξ = (3, 2, 1) 下满足奇偶条件的随机单项式"""
    exps = {}
    for _ in range(draw(st.integers(min_value=0, max_value=3))):
        i = draw(st.integers(min_value=1, max_value=3))
        p = B3_HEIGHTS[i] + 2 * draw(st.integers(min_value=-3, max_value=3))
        exps[RepVertex(i, p)] = draw(st.integers(min_value=-2, max_value=2))
    return TorusMonomial.from_map(exps, draw(st.integers(min_value=-4, max_value=4)))


def test_pairing_value(b3_torus):
    assert b3_torus.pairing(RepVertex(1, 3), RepVertex(2, 2)) == -2
    assert b3_torus.pairing(RepVertex(2, 2), RepVertex(1, 3)) == 2
    assert b3_torus.pairing(RepVertex(1, 3), RepVertex(1, 3)) == 0


def test_pairing_via_roots(b3_quiver):
    assert n_via_roots(b3_quiver, RepVertex(1, 3), RepVertex(2, 2)) == -2
    assert n_via_roots(b3_quiver, RepVertex(2, 2), RepVertex(2, 2)) == 0


def test_pairing_parity_violation(b3_torus):
    with pytest.raises(ValueError):
        b3_torus.pairing(RepVertex(1, 3), RepVertex(2, 3))
    with pytest.raises(ValueError):
        b3_torus.X(1, 2)


def test_commutation_of_generators(b3_torus):
    x, y = b3_torus.X(1, 3), b3_torus.X(2, 2)
    xy = b3_torus.multiply_monomials(x, y)
    yx = b3_torus.multiply_monomials(y, x)
    assert xy.same_variables(yx)
    assert xy.qpow2 - yx.qpow2 == 2 * b3_torus.pairing(RepVertex(1, 3), RepVertex(2, 2))


def test_bar_normalize_generator(b3_torus):
    normalized = b3_torus.bar_normalize(b3_torus.X(1, 1))
    assert normalized.qpow2 == 2
    assert b3_torus.is_bar_invariant(normalized)
    assert b3_torus.bar_normalize(b3_torus.X(3, 1)).qpow2 == 1


def test_interval_and_b_monomials_bar_invariant(b3_torus):
    assert b3_torus.is_bar_invariant(b3_torus.interval_monomial(1, -1, 5))
    for i, p in ((1, 2), (2, 3), (3, 0)):
        b = b3_torus.b_monomial(i, p)
        assert b3_torus.is_bar_invariant(b)
        assert b3_torus.wtQ(b).is_zero()
    with pytest.raises(ValueError):
        b3_torus.b_monomial(1, 1)
    with pytest.raises(ValueError):
        b3_torus.interval_monomial(1, 5, 1)


@settings(max_examples=40, deadline=None)
@given(b3_monomials(), b3_monomials(), b3_monomials())
def test_multiplication_is_associative(b3_torus, m1, m2, m3):
    left = b3_torus.multiply_monomials(b3_torus.multiply_monomials(m1, m2), m3)
    right = b3_torus.multiply_monomials(m1, b3_torus.multiply_monomials(m2, m3))
    assert left == right


@settings(max_examples=40, deadline=None)
@given(b3_monomials(), b3_monomials())
def test_bar_is_anti_multiplicative(b3_torus, m1, m2):
    lhs = b3_torus.bar_monomial(b3_torus.multiply_monomials(m1, m2))
    rhs = b3_torus.multiply_monomials(b3_torus.bar_monomial(m2), b3_torus.bar_monomial(m1))
    assert lhs == rhs
    assert b3_torus.bar_monomial(b3_torus.bar_monomial(m1)) == m1
    assert b3_torus.is_bar_invariant(b3_torus.bar_normalize(m1))


@settings(max_examples=40, deadline=None)
@given(b3_monomials())
def test_inverse(b3_torus, m):
    assert b3_torus.multiply_monomials(m, b3_torus.inverse(m)) == TorusMonomial.one()
    assert b3_torus.multiply_monomials(b3_torus.inverse(m), m) == TorusMonomial.one()


def test_seven_term_element(b3_torus):
    element = parse_element(b3_torus, SEVEN_TERMS)
    assert len(element) == 8
    assert {w.coords for w in b3_torus.element_weights(element)} == {(0, 1, 0)}
    assert parse_element(b3_torus, format_element(element)) == element


def test_element_arithmetic(b3_torus):
    x = parse_element(b3_torus, "2*X[1,1] - q^1/2*X[3,1]")
    assert (x - x).is_zero()
    assert len(x + x) == 2
    assert format_element(x) == "2*X[1,1] - q^1/2*X[3,1]"
    one = TorusElement.of(TorusMonomial.one())
    assert b3_torus.multiply(x, one) == x
    assert format_element(TorusElement.zero()) == "0"


@pytest.mark.parametrize("text", ["", "X[1,1] +", "X[1,1] X[2,2]", "Y[1,1]", "X[1,2]", "* X[1,1]"])
def test_parse_errors(b3_torus, text):
    with pytest.raises(ValueError):
        parse_element(b3_torus, text)


def test_kq_generator(b3_torus):
    element = b3_torus.kq_generator(1, 1)
    assert len(element) == 2
    exps = {m.exp_map.get(RepVertex(1, 1)) for m in element.monomials()}
    assert exps == {1, None}
    tail = [m for m in element.monomials() if RepVertex(1, 1) not in m.exp_map][0]
    assert tail.exp_map == {RepVertex(1, 3): -1, RepVertex(2, 2): 1}


def test_wtq_of_generators(b3_torus):
    assert b3_torus.wtQ(b3_torus.X(1, 3)) == LatticeVec.root((1, 0, 0))
    assert b3_torus.wtQ(b3_torus.X(1, 7)) == LatticeVec.root((0, -1, 0))


def test_calN_on_window(b3_torus, g2_quiver):
    assert calN_failure(b3_torus, -4, 4) is None
    assert calN_failure(QuantumTorus(g2_quiver), -3, 5) is None


def test_nnkr_on_window(b3_torus):
    cases = list(nnkr_cases(b3_torus, -1, 3))
    assert cases
    assert nnkr_failure(b3_torus, -1, 3) is None
    with pytest.raises(ValueError):
        check_nnkr(b3_torus, 1, 5, 5, 1, 1, 1)


def test_ya_on_window(b3_torus, g2_quiver):
    assert ya_failure(b3_torus, -2, 4) is None
    assert ya_failure(QuantumTorus(g2_quiver), -2, 4) is None
    assert ya_beta(b3_torus, 1, 3, 1, 2) == -4
    assert ya_beta(b3_torus, 3, 1, 3, 2) == 2
    assert ya_beta(b3_torus, 1, 3, 2, 2) == 0

"""
环面元素的文本写法
形如 "q^1*X[1,1] + 2*q^-1/2*X[1,7]^-1"，项内因子按给定次序相乘
"""

import re
from typing import List, Tuple

from .monomial import TorusElement, TorusMonomial
from .torus import QuantumTorus

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<int>\d+)"
    r"|q(?:\s*\^\s*(?P<qexp>[+-]?\d+(?:\s*/\s*2)?))?"
    r"|X\s*\[\s*(?P<i>\d+)\s*,\s*(?P<p>[+-]?\d+)\s*\](?:\s*\^\s*(?P<xexp>[+-]?\d+))?"
    r"|(?P<op>[+*-])"
    r")"
)


def _tokenize(text: str) -> List[Tuple[str, re.Match]]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match or match.end() == pos:
            raise ValueError(f"无法解析环面元素 '{text}'：位置 {pos} 附近的 '{stripped[pos:pos + 10]}'")
        if match.group("int") is not None:
            kind = "int"
        elif match.group("op") is not None:
            kind = "op"
        elif match.group("i") is not None:
            kind = "X"
        else:
            kind = "q"
        tokens.append((kind, match))
        pos = match.end()
    return tokens


def _qexp2(raw: str) -> int:
    raw = raw.replace(" ", "")
    if raw.endswith("/2"):
        return int(raw[:-2])
    return 2 * int(raw)


def parse_element(torus: QuantumTorus, text: str) -> TorusElement:
    """
    解析环面元素

    Args:
        torus: 量子环面，用于检查奇偶条件并按交换关系相乘
        text: 由 '+'/'-' 连接的项，每项为整数、q^a、X[i,p]^e 以 '*' 连接

    Returns:
        正规形式的 TorusElement
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("环面元素不能为空")
    terms = []
    index = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1].group("op") in "+-":
        sign = -1 if tokens[0][1].group("op") == "-" else 1
        index = 1
    while True:
        coefficient = sign
        monomial = TorusMonomial.one()
        expect_factor = True
        while index < len(tokens):
            kind, match = tokens[index]
            if expect_factor:
                if kind == "int":
                    coefficient *= int(match.group("int"))
                elif kind == "q":
                    raw = match.group("qexp")
                    monomial = monomial.with_qpow2(monomial.qpow2 + (_qexp2(raw) if raw else 2))
                elif kind == "X":
                    e = int(match.group("xexp")) if match.group("xexp") else 1
                    factor = torus.X(int(match.group("i")), int(match.group("p")), e)
                    monomial = torus.multiply_monomials(monomial, factor)
                else:
                    raise ValueError(f"无法解析环面元素 '{text}'：'{match.group('op')}' 处缺少因子")
                expect_factor = False
            elif kind == "op" and match.group("op") == "*":
                expect_factor = True
            else:
                break
            index += 1
        if expect_factor:
            raise ValueError(f"无法解析环面元素 '{text}'：末尾缺少因子")
        terms.append((monomial, coefficient))
        if index >= len(tokens):
            break
        kind, match = tokens[index]
        if kind != "op" or match.group("op") == "*":
            raise ValueError(f"无法解析环面元素 '{text}'：项之间需要 '+' 或 '-'")
        sign = -1 if match.group("op") == "-" else 1
        index += 1
    return TorusElement.from_terms(terms)


def _format_qexp(qpow2: int) -> str:
    return str(qpow2 // 2) if qpow2 % 2 == 0 else f"{qpow2}/2"


def format_monomial(monomial: TorusMonomial, coefficient: int = 1) -> str:
    factors = []
    if coefficient != 1 or not (monomial.qpow2 or monomial.exps):
        factors.append(str(coefficient))
    if monomial.qpow2:
        factors.append(f"q^{_format_qexp(monomial.qpow2)}")
    for v, e in monomial.exps:
        factors.append(f"X[{v.i},{v.p}]" if e == 1 else f"X[{v.i},{v.p}]^{e}")
    return "*".join(factors)


def format_element(element: TorusElement) -> str:
    """parse_element 的逆：因子按正规序输出"""
    if element.is_zero():
        return "0"
    pieces = []
    for index, (monomial, coefficient) in enumerate(element.terms):
        body = format_monomial(monomial, abs(coefficient))
        if index == 0:
            pieces.append(body if coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if coefficient > 0 else '-'} {body}")
    return " ".join(pieces)

"""
相容对 (Λ, B̃)
序列指标形式、Γ 坐标形式以及 Λ^{[Q]}
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..cartan import CartanDatum, LatticeVec, bilinear, fundamental_weight, to_root_basis
from ..quivers import DynkinQuiver, RepVertex, adapted_positions, ar_quiver, compatible_reading
from ..torus import QuantumTorus
from ..weyl import WeylElement, beta_sequence, is_reduced, positive_roots
from .sequence import SequenceIndex


@dataclass
class PairMatrices:
    """
    序列 w̃ 的 Λ 与 B̃

    Lambda 为 r×r 反对称整数矩阵，B 为 r×|J_e| 整数矩阵，
    B 的第 c 列对应 J_e[c]，d_col 为对应的 d_{i_t}。
    """
    datum: CartanDatum
    word: Tuple[int, ...]
    Lambda: np.ndarray
    B: np.ndarray
    Je: List[int] = field(default_factory=list)
    d_col: List[int] = field(default_factory=list)

    def product(self) -> np.ndarray:
        """Λ·B̃"""
        if not self.Je:
            return np.zeros((len(self.word), 0), dtype=object)
        return self.Lambda.dot(self.B)

    def product_diag(self) -> List[int]:
        """(Λ·B̃)_{t,t}，t ∈ J_e"""
        product = self.product()
        return [int(product[t - 1, c]) for c, t in enumerate(self.Je)]

    def product_diag_intro(self) -> List[int]:
        """以 Λ^T 代替 Λ 的对角元，即 +2d 的归一化"""
        return [-x for x in self.product_diag()]

    def to_dict(self) -> Dict:
        return {
            "type": str(self.datum.ctype),
            "word": list(self.word),
            "je": list(self.Je),
            "lambda": [[int(x) for x in row] for row in self.Lambda],
            "b": [[int(x) for x in row] for row in self.B],
            "product_diag": self.product_diag(),
            "product_diag_intro": self.product_diag_intro(),
            "compatible": check_compatible(self),
        }


def exchange_matrix(datum: CartanDatum, word: Sequence[int]) -> Tuple[np.ndarray, List[int]]:
    """
    B̃^w̃ = (b_{s,t})，s ∈ J，t ∈ J_e

    Returns:
        (r×|J_e| 矩阵, J_e)
    """
    index = SequenceIndex(tuple(word))
    index.check(datum)
    je = index.Je
    matrix = np.zeros((index.r, len(je)), dtype=object)
    for column, t in enumerate(je):
        t_plus = index.kplus(t)
        for s in index.J:
            s_plus = index.kplus(s)
            c = datum.c(index.letter(s), index.letter(t))
            if s_plus == t:
                value = 1
            elif s == t_plus:
                value = -1
            elif s < t < s_plus < t_plus:
                value = c
            elif t < s < t_plus < s_plus:
                value = -c
            else:
                value = 0
            matrix[s - 1, column] = value
    return matrix, je


def prefix_weights(datum: CartanDatum, word: Sequence[int]) -> List[LatticeVec]:
    """w_{≤k} ϖ_{i_k}，k = 1..r"""
    prefix = WeylElement.identity(datum)
    images = []
    for letter in word:
        prefix = prefix.compose(WeylElement.simple(datum, letter))
        images.append(prefix.apply(fundamental_weight(datum, letter)))
    return images


def lambda_matrix(datum: CartanDatum, word: Sequence[int]) -> np.ndarray:
    """
    Λ^w̃

    s < t 时 Λ_{s,t} = (ϖ_{i_s} - w_{≤s}ϖ_{i_s}, ϖ_{i_t} + w_{≤t}ϖ_{i_t})，
    第一个参数化到根基后与权配对，其余按反对称补全。
    """
    index = SequenceIndex(tuple(word))
    index.check(datum)
    images = prefix_weights(datum, index.word)
    left = [
        to_root_basis(datum, fundamental_weight(datum, index.letter(k)) - images[k - 1])
        for k in index.J
    ]
    right = [fundamental_weight(datum, index.letter(k)) + images[k - 1] for k in index.J]
    matrix = np.zeros((index.r, index.r), dtype=object)
    for s in index.J:
        for t in range(s + 1, index.r + 1):
            value = int(bilinear(datum, left[s - 1], right[t - 1]))
            matrix[s - 1, t - 1] = value
            matrix[t - 1, s - 1] = -value
    return matrix


def pair_matrices(datum: CartanDatum, word: Sequence[int]) -> PairMatrices:
    word = tuple(word)
    B, je = exchange_matrix(datum, word)
    return PairMatrices(
        datum=datum,
        word=word,
        Lambda=lambda_matrix(datum, word),
        B=B,
        Je=je,
        d_col=[datum.sym(word[t - 1]) for t in je],
    )


def compatible_failure(pm: PairMatrices) -> Optional[str]:
    """
    检查 (Λ·B̃)_{s,t} = -2 d_{i_t} δ(s=t)

    Returns:
        不满足的单元格列表描述，全部成立时返回 None
    """
    product = pm.product()
    cells = []
    for column, t in enumerate(pm.Je):
        for s in range(1, len(pm.word) + 1):
            expected = -2 * pm.d_col[column] if s == t else 0
            if product[s - 1, column] != expected:
                cells.append(f"({s},{t}): {product[s - 1, column]} ≠ {expected}")
    if cells:
        return f"w̃={list(pm.word)}: " + "; ".join(cells[:5])
    return None


def check_compatible(pm: PairMatrices) -> bool:
    return compatible_failure(pm) is None


def check_transposed(pm: PairMatrices) -> bool:
    """Σ_γ b_{γ,t} Λ_{γ,s} = (α_{i_t}, α_{i_t}) δ(s=t)"""
    if not pm.Je:
        return True
    product = pm.B.T.dot(pm.Lambda)
    for column, t in enumerate(pm.Je):
        norm = 2 * pm.d_col[column]
        for s in range(1, len(pm.word) + 1):
            if product[column, s - 1] != (norm if s == t else 0):
                return False
    return True


def skew_symmetrizer_failure(pm: PairMatrices) -> Optional[str]:
    """J_e×J_e 块上 d_s b_{s,t} = -d_t b_{t,s}"""
    for a, s in enumerate(pm.Je):
        for b, t in enumerate(pm.Je):
            if pm.d_col[a] * pm.B[s - 1, b] != -pm.d_col[b] * pm.B[t - 1, a]:
                return f"d_{s} b_{s},{t} ≠ -d_{t} b_{t},{s}"
    return None


def satisfies_length_condition(datum: CartanDatum, word: Sequence[int]) -> bool:
    """长度不超过 ℓ(w_0) 的每个连续片段都是约化的"""
    word = tuple(word)
    span = min(len(positive_roots(datum)), len(word))
    return all(is_reduced(datum, word[a:a + span]) for a in range(len(word) - span + 1))


def check_conjecture(datum: CartanDatum, word: Sequence[int]) -> Optional[str]:
    """
    在满足长度条件的任意序列上检验相容性

    Args:
        datum: Cartan数据
        word: 下标序列

    Returns:
        反例单元格描述，成立时返回 None
    """
    if not satisfies_length_condition(datum, word):
        raise ValueError(f"序列 {tuple(word)} 不满足长度条件，存在非约化的短片段")
    return compatible_failure(pair_matrices(datum, word))


def prefixes_failure(datum: CartanDatum, word: Sequence[int]) -> Tuple[int, Optional[str]]:
    """
    对 w̃ 的每个前缀检验相容性

    前缀的 Λ 是整个序列 Λ 的左上角子矩阵，只需计算一次。

    Returns:
        (检查过的前缀数, 第一个反例或 None)
    """
    word = tuple(word)
    full = lambda_matrix(datum, word)
    for k in range(1, len(word) + 1):
        prefix = word[:k]
        B, je = exchange_matrix(datum, prefix)
        pm = PairMatrices(
            datum=datum,
            word=prefix,
            Lambda=full[:k, :k],
            B=B,
            Je=je,
            d_col=[datum.sym(prefix[t - 1]) for t in je],
        )
        failure = compatible_failure(pm)
        if failure:
            return k, failure
    return len(word), None


def lambda_by_roots(datum: CartanDatum, word: Sequence[int]) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]:
    """约化词的 Λ，以 (β_s, β_t) 为下标"""
    betas, reduced = beta_sequence(datum, word)
    if not reduced:
        raise ValueError(f"序列 {tuple(word)} 不是约化词")
    matrix = lambda_matrix(datum, word)
    return {
        (betas[s].coords, betas[t].coords): int(matrix[s, t])
        for s in range(len(betas))
        for t in range(len(betas))
    }


def commutation_invariance_failure(datum: CartanDatum, words: Sequence[Sequence[int]]) -> Optional[str]:
    """同一交换类中的约化词给出相同的 Λ（按根重排后）"""
    reference = None
    for word in words:
        current = lambda_by_roots(datum, word)
        if reference is None:
            reference = (tuple(word), current)
        elif current != reference[1]:
            return f"{list(reference[0])} 与 {list(word)} 的 Λ 不同"
    return None


# ---- Γ 坐标形式 ----


@dataclass
class GammaForms:
    """以适配位置 (i_k, p_k) 为下标的 Λ′ 与 B′"""
    positions: List[RepVertex]
    exchangeable: List[RepVertex]
    Lambda: np.ndarray
    B: np.ndarray


def gamma_forms(quiver: DynkinQuiver, word: Sequence[int], torus=None) -> GammaForms:
    """
    Q-适配序列的 Γ 坐标形式

    Args:
        quiver: Dynkin箭图
        word: Q-适配序列
        torus: 可选的 QuantumTorus，用于计算区间单项式的 N

    Returns:
        GammaForms，其中 Λ′ = N(m^{(i)}[p,ξ_i], m^{(j)}[s,ξ_j])
    """
    datum = quiver.datum
    positions = adapted_positions(quiver, word)
    torus = torus if torus is not None else QuantumTorus(quiver)
    index = SequenceIndex(tuple(word))
    exchangeable = [positions[t - 1] for t in index.Je]

    intervals = [torus.interval_monomial(v.i, v.p, quiver.height(v.i)) for v in positions]
    size = len(positions)
    lam = np.zeros((size, size), dtype=object)
    for a in range(size):
        for b in range(size):
            lam[a, b] = torus.n_monomials(intervals[a], intervals[b])

    b_matrix = np.zeros((size, len(exchangeable)), dtype=object)
    for row, u in enumerate(positions):
        for column, v in enumerate(exchangeable):
            sign = -1 if v.p > u.p else 1
            gap = abs(u.p - v.p)
            if gap == 1 and datum.distance(u.i, v.i) == 1:
                b_matrix[row, column] = sign * datum.c(u.i, v.i)
            elif gap == 2 and u.i == v.i:
                b_matrix[row, column] = sign
    return GammaForms(positions, exchangeable, lam, b_matrix)


def gamma_forms_failure(quiver: DynkinQuiver, word: Sequence[int], torus=None) -> Optional[str]:
    """Γ 形式经 k ↔ (i_k, p_k) 重排后等于序列形式"""
    forms = gamma_forms(quiver, word, torus)
    pm = pair_matrices(quiver.datum, word)
    if not np.array_equal(forms.Lambda, pm.Lambda):
        return f"w̃={list(word)}: Λ′ 与 Λ 不一致"
    if not np.array_equal(forms.B, pm.B):
        return f"w̃={list(word)}: B′ 与 B̃ 不一致"
    return None


# ---- Λ^{[Q]} ----


@dataclass(frozen=True)
class RootData:
    """Γ_Q 中一个正根的附属数据"""
    root: LatticeVec
    vertex: RepVertex
    lam: LatticeVec
    plus: Optional[LatticeVec]
    minus: Optional[LatticeVec]
    lam_minus: LatticeVec


def alpha_plus_minus(quiver: DynkinQuiver) -> Dict[Tuple[int, ...], RootData]:
    """
    正根 α 的 α^±、λ_α 与 λ_{α⁻}

    φ_Q(i,p) = (α,0) 时 λ_α = τ^{(ξ_i-p)/2+1}ϖ_i，α⁻ 位于 (i,p+2)，α⁺ 位于 (i,p-2)，
    不在 Γ_Q 中时记为 None；α⁻ 不存在时 λ_{α⁻} = ϖ_i。
    """
    ar = ar_quiver(quiver)
    present = set(ar.vertices)
    data = {}
    for vertex in ar.vertices:
        i, p = vertex.i, vertex.p
        weight = fundamental_weight(quiver.datum, i)
        lam = quiver.tau_power((quiver.height(i) - p) // 2 + 1, weight)
        above, below = RepVertex(i, p + 2), RepVertex(i, p - 2)
        minus = ar.labels[above].root if above in present else None
        plus = ar.labels[below].root if below in present else None
        lam_minus = quiver.tau_power((quiver.height(i) - p) // 2, weight)
        root = ar.labels[vertex].root
        data[root.coords] = RootData(root, vertex, lam, plus, minus, lam_minus)
    return data


def alpha_plus_minus_failure(quiver: DynkinQuiver) -> Optional[str]:
    """λ_{α⁻} = λ_α + α；α⁻ ≠ 0 时 α = τ α⁻，否则 α = γ_i"""
    datum = quiver.datum
    for coords, item in sorted(alpha_plus_minus(quiver).items()):
        if to_root_basis(datum, item.lam_minus - item.lam) != item.root:
            return f"α={list(coords)}: λ_(α⁻) ≠ λ_α + α"
        if item.minus is None:
            if item.root != quiver.gamma(item.vertex.i):
                return f"α={list(coords)}: α⁻ = 0 但 α ≠ γ_{item.vertex.i}"
        elif quiver.tau.apply(item.minus) != item.root:
            return f"α={list(coords)}: α ≠ τ α⁻"
    return None


@dataclass
class LambdaQ:
    """Λ^{[Q]}，以 Φ⁺ 为下标"""
    quiver: DynkinQuiver
    roots: List[Tuple[int, ...]]
    data: Dict[Tuple[int, ...], RootData]
    entries: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]

    def value(self, alpha, beta) -> int:
        a = alpha.coords if isinstance(alpha, LatticeVec) else tuple(alpha)
        b = beta.coords if isinstance(beta, LatticeVec) else tuple(beta)
        if (a, b) not in self.entries:
            raise KeyError(f"未知的根: {list(a)} 或 {list(b)}")
        return self.entries[(a, b)]

    def residue(self, alpha) -> int:
        a = alpha.coords if isinstance(alpha, LatticeVec) else tuple(alpha)
        return self.data[a].vertex.i


def _lambda_formula(datum: CartanDatum, first: RootData, second: RootData) -> int:
    i, j = first.vertex.i, second.vertex.i
    left = to_root_basis(datum, fundamental_weight(datum, i) - first.lam)
    right = fundamental_weight(datum, j) + second.lam
    return int(bilinear(datum, left, right))


def lambda_Q(quiver: DynkinQuiver) -> LambdaQ:
    """
    Λ^{[Q]}

    β ⋠ α 时 Λ_{αβ} = (ϖ_i - λ_α, ϖ_j + λ_β)，否则 Λ_{αβ} = -Λ_{βα}，
    其中 ≼ 由 Γ_Q 中的路径给出。
    """
    datum = quiver.datum
    ar = ar_quiver(quiver)
    data = alpha_plus_minus(quiver)
    order = [ar.labels[v].root.coords for v in compatible_reading(quiver)]
    entries = {}
    for a in order:
        for b in order:
            if a == b:
                entries[(a, b)] = 0
                continue
            va, vb = data[a].vertex, data[b].vertex
            # β ≼ α 当且仅当 Γ_Q 中有从 α 到 β 的路径
            if nx.has_path(ar.graph, va, vb):
                entries[(a, b)] = -_lambda_formula(datum, data[b], data[a])
            else:
                entries[(a, b)] = _lambda_formula(datum, data[a], data[b])
    return LambdaQ(quiver, order, data, entries)


def lambda_Q_failure(quiver: DynkinQuiver) -> Optional[str]:
    """
    Λ^{[Q]} 与相容读法词上的 Λ^w̃ 一致，且不可比的根对两种写法相同
    """
    datum = quiver.datum
    lq = lambda_Q(quiver)
    word = tuple(v.i for v in compatible_reading(quiver))
    matrix = lambda_matrix(datum, word)
    for s, a in enumerate(lq.roots):
        for t, b in enumerate(lq.roots):
            if lq.entries[(a, b)] != matrix[s, t]:
                return f"Λ^[Q]({list(a)},{list(b)}) = {lq.entries[(a, b)]} ≠ Λ_{s + 1},{t + 1} = {matrix[s, t]}"
    ar = ar_quiver(quiver)
    for a in lq.roots:
        for b in lq.roots:
            va, vb = lq.data[a].vertex, lq.data[b].vertex
            if a == b or nx.has_path(ar.graph, va, vb) or nx.has_path(ar.graph, vb, va):
                continue
            if _lambda_formula(datum, lq.data[a], lq.data[b]) != -_lambda_formula(datum, lq.data[b], lq.data[a]):
                return f"不可比的根 {list(a)}, {list(b)} 的两种写法不同"
    return None


def torus_iso_failure(quiver: DynkinQuiver, torus=None) -> Optional[str]:
    """Γ_Q 上 N(m^{(i)}[p,ξ_i], m^{(j)}[s,ξ_j]) = Λ^{[Q]}_{αβ}"""
    torus = torus if torus is not None else QuantumTorus(quiver)
    lq = lambda_Q(quiver)
    intervals = {
        a: torus.interval_monomial(item.vertex.i, item.vertex.p, quiver.height(item.vertex.i))
        for a, item in lq.data.items()
    }
    for a in lq.roots:
        for b in lq.roots:
            value = torus.n_monomials(intervals[a], intervals[b])
            if value != lq.entries[(a, b)]:
                va, vb = lq.data[a].vertex, lq.data[b].vertex
                return f"ξ={list(quiver.xi)}: κ{va}{vb} = {value} ≠ Λ^[Q] = {lq.entries[(a, b)]}"
    return None


def check_torus_iso(quiver: DynkinQuiver, torus=None) -> bool:
    return torus_iso_failure(quiver, torus) is None

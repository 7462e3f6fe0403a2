"""
Hasse箭图 Υ
编码 w_0 约化词的交换类与凸序
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx

from ..cartan import CartanDatum, LatticeVec
from .roots import positive_roots
from .words import beta_sequence

Arrow = Tuple[Tuple[int, ...], Tuple[int, ...], int]


@dataclass
class HasseQuiver:
    """
    w_0 约化词的Hasse箭图

    顶点为正根（根基坐标），带留数标签；箭头 β_k → β_l 带重数。
    """
    datum: CartanDatum
    word: Tuple[int, ...]
    vertices: List[LatticeVec]
    residues: Dict[Tuple[int, ...], int]
    arrows: List[Arrow] = field(default_factory=list)

    def __post_init__(self):
        self.graph = nx.DiGraph()
        for vertex in self.vertices:
            self.graph.add_node(vertex.coords, residue=self.residues[vertex.coords])
        for source, target, multiplicity in self.arrows:
            self.graph.add_edge(source, target, multiplicity=multiplicity)

    def labeled_key(self) -> Tuple[FrozenSet, FrozenSet]:
        """带标签箭图的比较键"""
        return frozenset(self.residues.items()), frozenset(self.arrows)

    def arrow_count(self) -> int:
        return sum(multiplicity for _, _, multiplicity in self.arrows)

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    def to_dict(self) -> Dict:
        return {
            "type": str(self.datum.ctype),
            "word": list(self.word),
            "vertices": [
                {"root": list(v.coords), "residue": self.residues[v.coords]} for v in self.vertices
            ],
            "arrows": [
                {"source": list(s), "target": list(t), "multiplicity": m} for s, t, m in self.arrows
            ],
        }

    def to_dot(self) -> str:
        """顶点标签为 "i: 根坐标"，i 为留数"""
        lines = [f'digraph "hasse_{self.datum.ctype}" {{', "  rankdir=LR;"]
        for vertex in self.vertices:
            key = ",".join(str(c) for c in vertex.coords)
            lines.append(f'  "{key}" [label="{self.residues[vertex.coords]}: {key}"];')
        for source, target, multiplicity in self.arrows:
            s = ",".join(str(c) for c in source)
            t = ",".join(str(c) for c in target)
            for _ in range(multiplicity):
                lines.append(f'  "{s}" -> "{t}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse_arrows(datum: CartanDatum, word: Sequence[int], betas: Sequence[LatticeVec]) -> List[Arrow]:
    """β_k → β_l 当且仅当 l < k、d(i_k, i_l) = 1 且中间没有字母属于 {i_k, i_l}"""
    arrows = []
    last_seen: Dict[int, int] = {}
    for k, letter in enumerate(word):
        for neighbor in datum.neighbors(letter):
            l = last_seen.get(neighbor)
            if l is None:
                continue
            own = last_seen.get(letter)
            if own is not None and own > l:
                continue
            arrows.append((betas[k].coords, betas[l].coords, -datum.c(letter, neighbor)))
        last_seen[letter] = k
    return arrows


def hasse_quiver(datum: CartanDatum, word: Sequence[int]) -> HasseQuiver:
    """
    构造 w_0 约化词的Hasse箭图

    Args:
        datum: Cartan数据
        word: w_0 的约化词

    Returns:
        HasseQuiver对象
    """
    word = tuple(word)
    betas, reduced = beta_sequence(datum, word)
    expected = len(positive_roots(datum))
    if not reduced:
        raise ValueError(f"词 {word} 不是约化词")
    if len(word) != expected:
        raise ValueError(f"词长 {len(word)} 不等于 ℓ(w_0) = {expected}")
    residue_map = {beta.coords: letter for beta, letter in zip(betas, word)}
    return HasseQuiver(
        datum=datum,
        word=word,
        vertices=list(betas),
        residues=residue_map,
        arrows=hasse_arrows(datum, word, betas),
    )


def same_commutation_class(datum: CartanDatum, w1: Sequence[int], w2: Sequence[int]) -> bool:
    """两个 w_0 约化词属于同一交换类当且仅当Hasse箭图相同"""
    return hasse_quiver(datum, w1).labeled_key() == hasse_quiver(datum, w2).labeled_key()


def _coords(root) -> Tuple[int, ...]:
    return root.coords if isinstance(root, LatticeVec) else tuple(root)


def convex_leq(quiver: HasseQuiver, alpha, beta) -> bool:
    """
    凸序 α ⪯ β

    Args:
        quiver: Hasse箭图
        alpha, beta: 正根（LatticeVec 或坐标元组）

    Returns:
        存在从 β 到 α 的有向路径时为 True
    """
    a, b = _coords(alpha), _coords(beta)
    for root in (a, b):
        if root not in quiver.graph:
            raise KeyError(f"未知的根: {list(root)}")
    return a == b or nx.has_path(quiver.graph, b, a)

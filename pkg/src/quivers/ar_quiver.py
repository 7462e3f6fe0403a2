"""
AR箭图与重复箭图窗口
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx

from ..cartan import LatticeVec
from ..weyl import PhiHatElt, star
from .dynkin_quiver import DynkinQuiver


@dataclass(frozen=True, order=True)
class RepVertex:
    """重复箭图的顶点 (i, p)"""
    i: int
    p: int

    def __str__(self) -> str:
        return f"({self.i},{self.p})"


def reading_key(vertex: RepVertex) -> Tuple[int, int]:
    """相容读法的顺序：p 递减，同层按 i 递增"""
    return -vertex.p, vertex.i


@dataclass
class ARQuiver:
    """
    重复箭图的有限切片

    kind 为 "ar" 时顶点即 Γ_Q 的顶点、标签层数均为0；
    kind 为 "rep" 时为窗口 [lo, hi] 内的全部顶点。
    """
    quiver: DynkinQuiver
    kind: str
    vertices: List[RepVertex]
    labels: Dict[RepVertex, PhiHatElt]
    arrows: List[Tuple[RepVertex, RepVertex, int]] = field(default_factory=list)

    def __post_init__(self):
        self.graph = nx.DiGraph()
        for vertex in self.vertices:
            self.graph.add_node(vertex, root=self.labels[vertex].root.coords)
        for source, target, multiplicity in self.arrows:
            self.graph.add_edge(source, target, multiplicity=multiplicity)

    def label(self, i: int, p: int) -> LatticeVec:
        return self.labels[RepVertex(i, p)].root

    def vertex_of(self, root) -> RepVertex:
        """Γ_Q 中标签为给定正根的顶点"""
        coords = root.coords if isinstance(root, LatticeVec) else tuple(root)
        for vertex in self.vertices:
            if self.labels[vertex].root.coords == coords and self.labels[vertex].level == 0:
                return vertex
        raise KeyError(f"未知的根: {list(coords)}")

    def labeled_key(self):
        """以根为顶点的带标签箭图比较键，与 HasseQuiver.labeled_key 同构可比"""
        residues = frozenset((self.labels[v].root.coords, v.i) for v in self.vertices)
        arrows = frozenset(
            (self.labels[s].root.coords, self.labels[t].root.coords, m) for s, t, m in self.arrows
        )
        return residues, arrows

    def to_dict(self) -> Dict:
        return {
            "type": str(self.quiver.datum.ctype),
            "xi": list(self.quiver.xi),
            "kind": self.kind,
            "vertices": [
                {
                    "i": v.i,
                    "p": v.p,
                    "root": list(self.labels[v].root.coords),
                    "level": self.labels[v].level,
                }
                for v in self.vertices
            ],
            "arrows": [
                {"source": [s.i, s.p], "target": [t.i, t.p], "multiplicity": m}
                for s, t, m in self.arrows
            ],
        }

    def to_dot(self) -> str:
        """DOT格式，顶点标签为 "(i,p): 根坐标"，重数 m 的箭头画成 m 条边"""
        name = f"{self.kind}_{self.quiver.datum.ctype}"
        lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
        for v in self.vertices:
            x = self.labels[v]
            text = f"({v.i},{v.p}): {','.join(str(c) for c in x.root.coords)}"
            if self.kind == "rep":
                text += f" [{x.level}]"
            lines.append(f'  "{v.i},{v.p}" [label="{text}"];')
        for s, t, m in self.arrows:
            for _ in range(m):
                lines.append(f'  "{s.i},{s.p}" -> "{t.i},{t.p}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.kind} quiver of {self.quiver.datum.ctype}, xi = {list(self.quiver.xi)}"]
        for v in self.vertices:
            x = self.labels[v]
            lines.append(f"  ({v.i},{v.p})  root={list(x.root.coords)}  level={x.level}")
        for s, t, m in self.arrows:
            lines.append(f"  {s} -> {t}  x{m}")
        return "\n".join(lines) + "\n"


def _arrows(quiver: DynkinQuiver, vertices: List[RepVertex]) -> List[Tuple[RepVertex, RepVertex, int]]:
    present = set(vertices)
    datum = quiver.datum
    arrows = []
    for v in vertices:
        for j in datum.neighbors(v.i):
            target = RepVertex(j, v.p + 1)
            if target in present:
                arrows.append((v, target, -datum.c(v.i, j)))
    return arrows


def ar_vertices(quiver: DynkinQuiver) -> List[RepVertex]:
    """(Γ_Q)_0 = {(i,p) : ξ_{i*} - h < p ≤ ξ_i, p ≡ ξ_i mod 2}，按相容读法排序"""
    datum = quiver.datum
    vertices = []
    for i in datum.I:
        low = quiver.height(star(datum, i)) - datum.h
        p = quiver.height(i)
        while p > low:
            vertices.append(RepVertex(i, p))
            p -= 2
    return sorted(vertices, key=reading_key)


def ar_quiver(quiver: DynkinQuiver) -> ARQuiver:
    """
    组合AR箭图 Γ_Q

    Args:
        quiver: Dynkin箭图

    Returns:
        顶点数等于 |Φ⁺| 的 ARQuiver
    """
    vertices = ar_vertices(quiver)
    labels = {v: quiver.phi(v.i, v.p) for v in vertices}
    return ARQuiver(quiver, "ar", vertices, labels, _arrows(quiver, vertices))


def window_vertices(quiver: DynkinQuiver, lo: int, hi: int) -> List[RepVertex]:
    if lo > hi:
        raise ValueError(f"窗口下界 {lo} 大于上界 {hi}")
    vertices = [
        RepVertex(i, p)
        for i in quiver.datum.I
        for p in range(lo, hi + 1)
        if (p - quiver.height(i)) % 2 == 0
    ]
    return sorted(vertices, key=reading_key)


def repetition_quiver(quiver: DynkinQuiver, lo: int, hi: int) -> ARQuiver:
    """重复箭图在 lo ≤ p ≤ hi 上的切片，标签为 φ_Q 的完整值"""
    vertices = window_vertices(quiver, lo, hi)
    labels = {v: quiver.phi(v.i, v.p) for v in vertices}
    return ARQuiver(quiver, "rep", vertices, labels, _arrows(quiver, vertices))

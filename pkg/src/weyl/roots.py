"""
正根枚举
从单根出发，在单反射作用下做闭包
"""

from functools import lru_cache
from typing import List, Tuple

from ..cartan import CartanDatum, LatticeVec, simple_reflection, simple_root


@lru_cache(maxsize=None)
def _positive_root_coords(datum: CartanDatum) -> Tuple[Tuple[int, ...], ...]:
    found = {simple_root(datum, i).coords for i in datum.I}
    frontier = list(found)
    while frontier:
        next_frontier = []
        for coords in frontier:
            root = LatticeVec.root(coords)
            for i in datum.I:
                image = simple_reflection(datum, i, root)
                # s_i 只把 α_i 变成负根
                if image.is_positive() and image.coords not in found:
                    found.add(image.coords)
                    next_frontier.append(image.coords)
        frontier = next_frontier
    return tuple(sorted(found, key=lambda c: (sum(c), c)))


def positive_roots(datum: CartanDatum) -> List[LatticeVec]:
    """
    正根集合 Φ⁺

    Args:
        datum: Cartan数据

    Returns:
        根基下的正根列表，按高度再按坐标排序
    """
    return [LatticeVec.root(coords) for coords in _positive_root_coords(datum)]


def root_height(root: LatticeVec) -> int:
    return sum(root.coords)

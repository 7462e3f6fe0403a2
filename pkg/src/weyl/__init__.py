"""
Weyl群模块
正根、约化词、Hasse箭图与 ŵ 作用
"""

from .element import WeylElement
from .hasse import HasseQuiver, convex_leq, hasse_quiver, same_commutation_class
from .hat import (
    PhiHatElt,
    hat_action,
    hat_element,
    hat_inverse,
    hat_simple,
    hat_simple_inverse,
)
from .roots import positive_roots, root_height
from .words import (
    Word,
    beta_sequence,
    check_word,
    greedy_longest_word,
    is_reduced,
    length_of,
    longest_element,
    parse_word,
    residues,
    star,
    star_involution,
)

__all__ = [
    "WeylElement",
    "HasseQuiver",
    "convex_leq",
    "hasse_quiver",
    "same_commutation_class",
    "PhiHatElt",
    "hat_action",
    "hat_element",
    "hat_inverse",
    "hat_simple",
    "hat_simple_inverse",
    "positive_roots",
    "root_height",
    "Word",
    "beta_sequence",
    "check_word",
    "greedy_longest_word",
    "is_reduced",
    "length_of",
    "longest_element",
    "parse_word",
    "residues",
    "star",
    "star_involution",
]

"""Stuffle and shuffle products, and the deformed brackets that respect them."""

from .construction import construction_F, construction_F_lincomb, stuffle_bracket_family
from .products import (
    length_one_shuffle,
    length_one_stuffle,
    shuffle_mul,
    shuffle_mul_lincomb,
    stuffle_mul,
    stuffle_mul_lincomb,
)
from .reductions import mb_k1_reduction, mb_k1_via_product, shuffle_depth_three_combination
from .shuffle_brackets import (
    eval_shuffle_bracket,
    shuffle_bracket,
    shuffle_bracket_lincomb,
    shuffle_bracket_numeric,
)
from .stuffle_brackets import eval_stuffle_bracket, stuffle_bracket, stuffle_bracket_lincomb

__all__ = [
    "construction_F",
    "construction_F_lincomb",
    "eval_shuffle_bracket",
    "eval_stuffle_bracket",
    "length_one_shuffle",
    "length_one_stuffle",
    "mb_k1_reduction",
    "mb_k1_via_product",
    "shuffle_bracket",
    "shuffle_bracket_lincomb",
    "shuffle_bracket_numeric",
    "shuffle_depth_three_combination",
    "shuffle_mul",
    "shuffle_mul_lincomb",
    "stuffle_bracket",
    "stuffle_bracket_family",
    "stuffle_bracket_lincomb",
    "stuffle_mul",
    "stuffle_mul_lincomb",
]

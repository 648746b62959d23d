"""Word algebras over the z-, bi- and xy-alphabets."""

from .hoffman import (
    apply_composition,
    hoffman_exp,
    hoffman_exp_lincomb,
    hoffman_log,
    hoffman_log_lincomb,
)
from .letters import (
    BiLetter,
    BiLinComb,
    BiWord,
    LinComb,
    bi_words,
    compositions,
    embed_z_word,
    linear_sum,
    reverse_word,
    weak_compositions,
    word_sort_key,
    word_weight,
    z_words,
)
from .quasi_shuffle import (
    BI_STUFFLE,
    DIAMONDS,
    SHUFFLE,
    Z_STUFFLE,
    Diamond,
    clear_product_caches,
    deconcat_coproduct,
    diamond_bi,
    diamond_extend,
    ds,
    iterated_coproduct,
    quasi_shuffle,
    quasi_shuffle_lincomb,
    stuffle,
    xy_lincomb_to_z,
    xy_shuffle,
    xy_to_z,
    z_lincomb_to_xy,
    z_to_xy,
)
from .syntax import format_lincomb, format_word, parse_indices, parse_lincomb, parse_word

__all__ = [
    "BI_STUFFLE",
    "DIAMONDS",
    "SHUFFLE",
    "Z_STUFFLE",
    "BiLetter",
    "BiLinComb",
    "BiWord",
    "Diamond",
    "LinComb",
    "apply_composition",
    "bi_words",
    "clear_product_caches",
    "compositions",
    "deconcat_coproduct",
    "diamond_bi",
    "diamond_extend",
    "ds",
    "embed_z_word",
    "format_lincomb",
    "format_word",
    "hoffman_exp",
    "hoffman_exp_lincomb",
    "hoffman_log",
    "hoffman_log_lincomb",
    "iterated_coproduct",
    "linear_sum",
    "parse_indices",
    "parse_lincomb",
    "parse_word",
    "quasi_shuffle",
    "quasi_shuffle_lincomb",
    "reverse_word",
    "stuffle",
    "weak_compositions",
    "word_sort_key",
    "word_weight",
    "xy_lincomb_to_z",
    "xy_shuffle",
    "xy_to_z",
    "z_lincomb_to_xy",
    "z_to_xy",
    "z_words",
]

"""Stuffle brackets: brackets deformed to satisfy the stuffle product of z-words.

[s_1, ..., s_l]^* is the image of z_(s_1)...z_(s_l) under exp_bi-stuffle o log_stuffle,
with z_s read as the bi-letter z_(s,0).
"""

from collections.abc import Sequence
from functools import lru_cache

from ..brackets import eval_lincomb
from ..arith import TruncatedQSeries
from ..words import (
    BI_STUFFLE,
    Z_STUFFLE,
    LinComb,
    embed_z_word,
    hoffman_exp,
    hoffman_log,
    linear_sum,
)


@lru_cache(maxsize=None)
def _stuffle_bracket(word: tuple[int, ...]) -> LinComb:
    log_terms = hoffman_log(word, Z_STUFFLE)
    return linear_sum(
        hoffman_exp(embed_z_word(w), BI_STUFFLE).scale(c) for w, c in log_terms.items()
    )


def stuffle_bracket(indices: Sequence[int]) -> LinComb:
    """[s_1, ..., s_l]^* as a combination of brackets."""
    return _stuffle_bracket(tuple(indices))


def stuffle_bracket_lincomb(combo: LinComb) -> LinComb:
    """Linear extension to combinations of z-words."""
    return combo.apply(lambda w: _stuffle_bracket(tuple(w)))


def eval_stuffle_bracket(combo: LinComb, precision: int | None = None) -> TruncatedQSeries:
    """The stuffle homomorphism on z-words: w -> q-expansion of [w]^*."""
    return eval_lincomb(stuffle_bracket_lincomb(combo), precision)

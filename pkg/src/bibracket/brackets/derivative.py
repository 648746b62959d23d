"""The derivation d_q = q d/dq on bi-words, and the q -> 1 limit index."""

from fractions import Fraction
from math import prod

from ..arith import factorial
from ..exceptions import LimitNotCoveredError
from ..words import BiLetter, BiWord, LinComb


def dq_word(word: BiWord) -> LinComb:
    """d_q mb{s}{r} = sum_j s_j (r_j + 1) mb{.., s_j + 1, ..}{.., r_j + 1, ..}."""
    terms: dict[BiWord, Fraction] = {}
    for j, letter in enumerate(word):
        shifted = word[:j] + BiWord((BiLetter(letter.s + 1, letter.r + 1),)) + word[j + 1 :]
        terms[shifted] = terms.get(shifted, Fraction(0)) + letter.s * (letter.r + 1)
    return LinComb(terms)


def dq_lincomb(combo: LinComb) -> LinComb:
    return combo.apply(dq_word)


def z_limit_index(word: BiWord) -> tuple[Fraction, tuple[int, ...]]:
    """Coefficient and zeta index of lim_{q->1} (1-q)^k mb{s}{r}, k the weight.

    Returns (1 / prod r_j!, (s_1 - r_1, ..., s_l - r_l)); valid when s_1 > r_1 + 1
    and s_j >= r_j + 1 for the remaining j.
    """
    if not word:
        raise LimitNotCoveredError("the empty word has no limit index")
    first, rest = word[0], word[1:]
    if first.s <= first.r + 1 or any(a.s < a.r + 1 for a in rest):
        raise LimitNotCoveredError(
            f"limit not covered for mb{{{list(word.s)}}}{{{list(word.r)}}}: "
            "need s_1 > r_1 + 1 and s_j >= r_j + 1"
        )
    coefficient = Fraction(1, prod(factorial(a.r) for a in word))
    return coefficient, tuple(a.s - a.r for a in word)

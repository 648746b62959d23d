"""Hoffman's exponential and logarithm for quasi-shuffle algebras.

For a word w = a_1...a_l and a composition I = (i_1, ..., i_m) of l, I[w] is the
word whose j-th letter is the diamond product of the j-th run of i_j letters.
Then

    exp(w) = sum_I 1/(i_1! ... i_m!) I[w]
    log(w) = sum_I (-1)^(l-m)/(i_1 ... i_m) I[w]

and exp carries the shuffle (diamond = 0) to the quasi-shuffle of the diamond.
"""

from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

from ..arith import factorial
from .letters import LinComb, Word, compositions, linear_sum, make_word
from .quasi_shuffle import Diamond, group_product


def apply_composition(word: Word, composition: tuple[int, ...], diamond: Diamond) -> LinComb:
    """I[w]: concatenate the diamond products of consecutive runs of letters."""
    groups = []
    start = 0
    for size in composition:
        terms = group_product(word[start : start + size], diamond)
        if not terms:
            return LinComb()
        groups.append(terms)
        start += size
    out: dict = {}
    for choice in product(*groups):
        letters = tuple(letter for letter, _ in choice)
        coeff = prod((c for _, c in choice), start=Fraction(1))
        key = make_word(word, letters)
        out[key] = out.get(key, Fraction(0)) + coeff
    return LinComb(out)


def _composition_sum(
    word: Word, diamond: Diamond, weight: Callable[[tuple[int, ...]], Fraction]
) -> LinComb:
    return linear_sum(
        apply_composition(word, comp, diamond).scale(weight(comp))
        for comp in compositions(len(word))
    )


def _exp_weight(comp: tuple[int, ...]) -> Fraction:
    return Fraction(1, prod(factorial(i) for i in comp))


def _log_weight(comp: tuple[int, ...]) -> Fraction:
    sign = -1 if (sum(comp) - len(comp)) % 2 else 1
    return Fraction(sign, prod(comp))


@lru_cache(maxsize=None)
def hoffman_exp(word: Word, diamond: Diamond) -> LinComb:
    """Hoffman's exponential of a single word."""
    if not word:
        return LinComb.of(word)
    return _composition_sum(word, diamond, _exp_weight)


@lru_cache(maxsize=None)
def hoffman_log(word: Word, diamond: Diamond) -> LinComb:
    """Hoffman's logarithm of a single word; the inverse of `hoffman_exp`."""
    if not word:
        return LinComb.of(word)
    return _composition_sum(word, diamond, _log_weight)


def hoffman_exp_lincomb(combo: LinComb, diamond: Diamond) -> LinComb:
    return combo.apply(lambda w: hoffman_exp(w, diamond))


def hoffman_log_lincomb(combo: LinComb, diamond: Diamond) -> LinComb:
    return combo.apply(lambda w: hoffman_log(w, diamond))

"""The partition relation: conjugating Young diagrams as an involution P on bi-words.

With generating series T(X_1..X_l; Y_1..Y_l) = sum mb{s}{r} prod X_j^(s_j-1) Y_j^r_j,

    T(X_1, ..., X_l; Y_1, ..., Y_l) = T(Y_1 + ... + Y_l, ..., Y_1 + Y_2, Y_1;
                                        X_l, X_(l-1) - X_l, ..., X_1 - X_2)

so mb{s}{r} is the sum over w' = (s', r') of mb(w') times the coefficient of
prod X^(s-1) Y^r in prod X'_i^(s'_i - 1) Y'_i^(r'_i). The X' depend on Y only and
the Y' on X only, so the coefficient splits into two independent extractions.
"""

import logging
from fractions import Fraction
from functools import lru_cache

from ..arith import MultiPoly, binomial
from ..words import BiWord, LinComb, weak_compositions

logger = logging.getLogger(__name__)


def _x_prime(i: int, depth: int, cap: int) -> MultiPoly:
    """X'_i = Y_1 + ... + Y_(l+1-i), as a polynomial in Y_1..Y_l (i is 0-based here)."""
    return MultiPoly.linear([1 if j < depth - i else 0 for j in range(depth)], cap)


def _y_prime(i: int, depth: int, cap: int) -> MultiPoly:
    """Y'_i = X_(l+1-i) - X_(l+2-i) with X_(l+1) = 0 (i is 0-based here)."""
    coefficients = [0] * depth
    coefficients[depth - 1 - i] = 1
    if i > 0:
        coefficients[depth - i] = -1
    return MultiPoly.linear(coefficients, cap)


def _power_product(factors: list[MultiPoly], exponents: tuple[int, ...], cap: int) -> MultiPoly:
    result = MultiPoly.constant(1, len(exponents), cap)
    for factor, a in zip(factors, exponents):
        if a:
            result = result * factor**a
    return result


@lru_cache(maxsize=None)
def partition_map(word: BiWord) -> LinComb:
    """P(w): the combination of bi-words with the same q-expansion as w."""
    depth = len(word)
    if depth == 0:
        return LinComb.of(word)
    if depth == 1:
        letter = word[0]
        return LinComb.of(BiWord.from_indices([letter.r + 1], [letter.s - 1]))
    cap = word.weight
    x_prime = [_x_prime(i, depth, cap) for i in range(depth)]
    y_prime = [_y_prime(i, depth, cap) for i in range(depth)]
    y_target = word.r
    x_target = tuple(a - 1 for a in word.s)

    # Y-side: coefficient of prod Y^r in prod X'_i^(s'_i - 1), keyed by s' - 1
    y_side: dict[tuple[int, ...], Fraction] = {}
    for upper in weak_compositions(sum(y_target), depth):
        c = _power_product(x_prime, upper, cap).coefficient(y_target)
        if c:
            y_side[upper] = c
    # X-side: coefficient of prod X^(s-1) in prod Y'_i^(r'_i), keyed by r'
    x_side: dict[tuple[int, ...], Fraction] = {}
    for lower in weak_compositions(sum(x_target), depth):
        c = _power_product(y_prime, lower, cap).coefficient(x_target)
        if c:
            x_side[lower] = c

    terms = {}
    for upper, cy in y_side.items():
        s_prime = [a + 1 for a in upper]
        for lower, cx in x_side.items():
            terms[BiWord.from_indices(s_prime, lower)] = cy * cx
    result = LinComb(terms)
    logger.debug(f"P({word.s}|{word.r}) has {len(result)} terms")
    return result


def partition_map_lincomb(combo: LinComb) -> LinComb:
    return combo.apply(partition_map)


def length_two_partition(word: BiWord) -> LinComb:
    """Closed form of P in length two.

    mb{s1,s2}{r1,r2} = sum_{j <= r1, k < s2} (-1)^k binom(s1-1+k, k) binom(r2+j, j)
                          mb{r2+j+1, r1-j+1}{s2-1-k, s1-1+k}
    """
    (s1, s2), (r1, r2) = word.s, word.r
    terms = {}
    for j in range(r1 + 1):
        for k in range(s2):
            sign = -1 if k % 2 else 1
            coeff = sign * binomial(s1 - 1 + k, k) * binomial(r2 + j, j)
            target = BiWord.from_indices([r2 + j + 1, r1 - j + 1], [s2 - 1 - k, s1 - 1 + k])
            terms[target] = terms.get(target, Fraction(0)) + coeff
    return LinComb(terms)

"""The stuffle and shuffle products of bi-brackets.

Both expand a product of two bi-brackets as a combination of bi-brackets with
the same q-expansion. The shuffle is the stuffle conjugated by the partition
relation: u sh v = P(P(u) st P(v)).
"""

from fractions import Fraction
from functools import lru_cache

from ..arith import bernoulli, binomial, factorial
from ..brackets import partition_map, partition_map_lincomb
from ..words import BI_STUFFLE, BiWord, LinComb, linear_sum, quasi_shuffle


def stuffle_mul(u: BiWord, v: BiWord) -> LinComb:
    """u st v: the quasi-shuffle of bi-words with the bi-stuffle letter product."""
    return quasi_shuffle(BiWord(u), BiWord(v), BI_STUFFLE)


@lru_cache(maxsize=None)
def shuffle_mul(u: BiWord, v: BiWord) -> LinComb:
    """u sh v = P(P(u) st P(v))."""
    pu, pv = partition_map(u), partition_map(v)
    product = linear_sum(
        stuffle_mul(a, b).scale(ca * cb) for a, ca in pu.items() for b, cb in pv.items()
    )
    return partition_map_lincomb(product)


def stuffle_mul_lincomb(x: LinComb, y: LinComb) -> LinComb:
    return linear_sum(
        stuffle_mul(u, v).scale(cu * cv) for u, cu in x.items() for v, cv in y.items()
    )


def shuffle_mul_lincomb(x: LinComb, y: LinComb) -> LinComb:
    return linear_sum(
        shuffle_mul(u, v).scale(cu * cv) for u, cu in x.items() for v, cv in y.items()
    )


def _mb(s: int, r: int) -> BiWord:
    return BiWord.from_indices([s], [r])


def _add(terms: dict, word: BiWord, coeff) -> None:
    terms[word] = terms.get(word, Fraction(0)) + coeff


def length_one_stuffle(s1: int, r1: int, s2: int, r2: int) -> LinComb:
    """Closed form of mb{s1}{r1} st mb{s2}{r2}."""
    terms: dict[BiWord, Fraction] = {}
    r = r1 + r2
    outer = binomial(r, r1)
    _add(terms, BiWord.from_indices([s1, s2], [r1, r2]), 1)
    _add(terms, BiWord.from_indices([s2, s1], [r2, r1]), 1)
    _add(terms, _mb(s1 + s2, r), outer)
    for j in range(1, s1 + 1):
        m = s1 + s2 - j
        sign = -1 if (s2 - 1) % 2 else 1
        _add(terms, _mb(j, r), outer * sign * _scaled_bernoulli(m) * binomial(m - 1, s1 - j))
    for j in range(1, s2 + 1):
        m = s1 + s2 - j
        sign = -1 if (s1 - 1) % 2 else 1
        _add(terms, _mb(j, r), outer * sign * _scaled_bernoulli(m) * binomial(m - 1, s2 - j))
    return LinComb(terms)


def length_one_shuffle(s1: int, r1: int, s2: int, r2: int) -> LinComb:
    """Closed form of mb{s1}{r1} sh mb{s2}{r2}."""
    terms: dict[BiWord, Fraction] = {}
    r = r1 + r2
    for j in range(1, s1 + 1):
        for k in range(r2 + 1):
            sign = -1 if (r2 - k) % 2 else 1
            coeff = binomial(s1 + s2 - j - 1, s1 - j) * binomial(r - k, r1) * sign
            _add(terms, BiWord.from_indices([s1 + s2 - j, j], [k, r - k]), coeff)
    for j in range(1, s2 + 1):
        for k in range(r1 + 1):
            sign = -1 if (r1 - k) % 2 else 1
            coeff = binomial(s1 + s2 - j - 1, s1 - 1) * binomial(r - k, r1 - k) * sign
            _add(terms, BiWord.from_indices([s1 + s2 - j, j], [k, r - k]), coeff)
    outer = binomial(s1 + s2 - 2, s1 - 1)
    _add(terms, _mb(s1 + s2 - 1, r + 1), outer)
    for j in range(r1 + 1):
        m = r - j + 1
        sign = -1 if r2 % 2 else 1
        coeff = outer * sign * _scaled_bernoulli(m) * binomial(m - 1, r1 - j)
        _add(terms, _mb(s1 + s2 - 1, j), coeff)
    for j in range(r2 + 1):
        m = r - j + 1
        sign = -1 if r1 % 2 else 1
        coeff = outer * sign * _scaled_bernoulli(m) * binomial(m - 1, r2 - j)
        _add(terms, _mb(s1 + s2 - 1, j), coeff)
    return LinComb(terms)


def _scaled_bernoulli(m: int) -> Fraction:
    return bernoulli(m) / factorial(m)

"""Word-level reductions of bi-brackets with small lower weight to brackets."""

from fractions import Fraction

from ..arith import bernoulli, factorial
from ..exceptions import InvalidIndexError
from ..words import BiWord, LinComb
from .products import stuffle_mul
from .shuffle_brackets import shuffle_bracket


def _bracket(*indices: int) -> BiWord:
    return BiWord.from_indices(indices)


def mb_k1_via_product(k: int) -> LinComb:
    """mb{k}{1} = [k] st [1] - sum_{a+b=k+1} [a,b] - [k,1] + [k]."""
    if k < 1:
        raise InvalidIndexError(f"k must be positive, got {k}")
    terms = stuffle_mul(_bracket(k), _bracket(1))
    for a in range(1, k + 1):
        terms = terms - LinComb.of(_bracket(a, k + 1 - a))
    return terms - LinComb.of(_bracket(k, 1)) + LinComb.of(_bracket(k))


def mb_k1_reduction(k: int) -> LinComb:
    """mb{k}{1} written in brackets only.

    [k+1] + 1/2 [k] - sum_{a>1, a+b=k+1} [a,b] + sum_{j=2}^{k-1} B_(k-j+1)/(k-j+1)! [j]
    - 1/2 delta_(k,1) [1]
    """
    if k < 1:
        raise InvalidIndexError(f"k must be positive, got {k}")
    terms: dict[BiWord, Fraction] = {_bracket(k + 1): Fraction(1)}
    terms[_bracket(k)] = terms.get(_bracket(k), Fraction(0)) + Fraction(1, 2)
    for a in range(2, k + 1):
        word = _bracket(a, k + 1 - a)
        terms[word] = terms.get(word, Fraction(0)) - 1
    for j in range(2, k):
        m = k - j + 1
        terms[_bracket(j)] = terms.get(_bracket(j), Fraction(0)) + bernoulli(m) / factorial(m)
    if k == 1:
        terms[_bracket(1)] = terms.get(_bracket(1), Fraction(0)) - Fraction(1, 2)
    return LinComb(terms)


def shuffle_depth_three_combination(s1: int, s2: int) -> LinComb:
    """2 [s1,s2,1]^sh + 2 [s1,1,s2]^sh - mb{s1,s2}{1,0}; lies in the span of brackets."""
    if s2 < 2:
        raise InvalidIndexError(f"s2 must be at least 2, got {s2}")
    combo = shuffle_bracket((s1, s2, 1)).scale(2) + shuffle_bracket((s1, 1, s2)).scale(2)
    return combo - LinComb.of(BiWord.from_indices([s1, s2], [1, 0]))

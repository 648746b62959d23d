"""Shuffle brackets: bi-bracket combinations that satisfy the shuffle product of xy-words.

Both constructions below sum over the compositions I = (i_1, ..., i_m) of the
length l. Write b_j = i_1 + ... + i_j and c_j = l + 1 - b_j, so c_m = 1. A
composition contributes only if every position outside {c_1, ..., c_m} carries
the index 1; the kept indices, read from c_m up to c_1, are the new upper indices.

Symbolically, each composition applies the operator

    prod_j prod_{k=1}^{i_j - 1} ((d_(m+1-j) - d_(m+2-j)) / k - 1),    d_(m+1) = 0,

to the generating series of bi-brackets; a monomial c prod d_k^(a_k) becomes
c prod a_k! times the bi-bracket with lower indices a. Numerically, each
composition is a tri-bracket with multiplicities e = I, lower variables equal to
consecutive differences t_k - t_(k-1) of t_k = X_(c_k), and all upper indices 1.
"""

import logging
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from math import prod

from ..arith import MultiPoly, TruncatedQSeries, factorial
from ..brackets import TriIndex, eval_lincomb, eval_tribracket
from ..config import get_settings
from ..exceptions import PathMismatchError
from ..words import BiWord, LinComb, compositions, linear_sum, weak_compositions

logger = logging.getLogger(__name__)


def _contributing(indices: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    """Compositions of the length whose dropped positions all carry index 1.

    Yields the composition and the kept positions c_1, ..., c_m (1-based).
    """
    length = len(indices)
    for comp in compositions(length):
        partial = 0
        kept = []
        for size in comp:
            partial += size
            kept.append(length + 1 - partial)
        dropped = set(range(1, length + 1)) - set(kept)
        if all(indices[p - 1] == 1 for p in dropped):
            yield comp, kept


def _operator(comp: tuple[int, ...], cap: int) -> MultiPoly:
    m = len(comp)
    result = MultiPoly.constant(1, m, cap)
    for j, size in enumerate(comp, start=1):
        left, right = m - j, m + 1 - j  # 0-based variables of d_(m+1-j), d_(m+2-j)
        for k in range(1, size):
            coefficients = [Fraction(0)] * m
            coefficients[left] = Fraction(1, k)
            if right < m:
                coefficients[right] = Fraction(-1, k)
            factor = MultiPoly.linear(coefficients, cap) - MultiPoly.constant(1, m, cap)
            result = result * factor
    return result


@lru_cache(maxsize=None)
def _shuffle_bracket(indices: tuple[int, ...]) -> LinComb:
    if not indices:
        return LinComb.of(BiWord())
    parts = []
    for comp, kept in _contributing(indices):
        m = len(comp)
        upper = [indices[kept[m - k] - 1] for k in range(1, m + 1)]
        scale = Fraction(1, prod(factorial(i) for i in comp))
        terms = {}
        for exps, c in _operator(comp, len(indices)):
            weight = prod(factorial(a) for a in exps)
            terms[BiWord.from_indices(upper, exps)] = c * weight * scale
        parts.append(LinComb(terms))
    return linear_sum(parts)


def shuffle_bracket(indices: Sequence[int]) -> LinComb:
    """[s_1, ..., s_l]^sh as a combination of bi-brackets.

    In debug mode the result is checked against `shuffle_bracket_numeric`.
    """
    indices = tuple(indices)
    result = _shuffle_bracket(indices)
    settings = get_settings()
    if settings.debug:
        precision = min(settings.precision, 30)
        symbolic = eval_lincomb(result, precision)
        numeric = shuffle_bracket_numeric(indices, precision)
        if symbolic != numeric:
            logger.warning(f"Shuffle bracket {list(indices)} disagrees between paths")
            raise PathMismatchError(f"symbolic and numeric [{indices}]^sh differ")
    return result


def shuffle_bracket_numeric(
    indices: Sequence[int], precision: int | None = None
) -> TruncatedQSeries:
    """q-expansion of [s_1, ..., s_l]^sh computed from tri-brackets directly."""
    indices = tuple(indices)
    if precision is None:
        precision = get_settings().precision
    total = TruncatedQSeries.zero(precision)
    if not indices:
        return TruncatedQSeries.one(precision)
    for comp, kept in _contributing(indices):
        m = len(comp)
        target = tuple(indices[c - 1] - 1 for c in kept)
        degree = sum(target)
        scale = Fraction(1, prod(factorial(i) for i in comp))
        # Y_k = t_k - t_(k-1) with t_0 = 0, in the variables t_1..t_m
        differences = []
        for k in range(m):
            coefficients = [0] * m
            coefficients[k] = 1
            if k > 0:
                coefficients[k - 1] = -1
            differences.append(MultiPoly.linear(coefficients, max(degree, 1)))
        for lower in weak_compositions(degree, m):
            poly = MultiPoly.constant(1, m, max(degree, 1))
            for factor, a in zip(differences, lower):
                if a:
                    poly = poly * factor**a
            c = poly.coefficient(target)
            if c:
                tri = TriIndex((1,) * m, lower, comp)
                total = total + eval_tribracket(tri, precision).scale(c * scale)
    return total


def shuffle_bracket_lincomb(combo: LinComb) -> LinComb:
    """Linear extension to combinations of z-words."""
    return combo.apply(lambda w: shuffle_bracket(tuple(w)))


def eval_shuffle_bracket(combo: LinComb, precision: int | None = None) -> TruncatedQSeries:
    """The shuffle homomorphism on z-words: w -> q-expansion of [w]^sh."""
    return eval_lincomb(shuffle_bracket_lincomb(combo), precision)

"""Truncated iterated sums of a family of stuffle homomorphisms.

Given homomorphisms f(., m) from z-words with the stuffle product into a
commutative algebra, one per m >= 1,

    F_w(M) = sum over w = w_1 ... w_k (w_i nonempty), 0 < m_1 < ... < m_k < M
             of f(w_1, m_1) ... f(w_k, m_k),

computed through F_w(M + 1) = sum_{uv = w} F_u(M) f(v, M) with F_(empty) = 1.
For each M the map w -> F_w(M) is again a stuffle homomorphism.
"""

import logging
from collections.abc import Callable
from functools import lru_cache
from typing import TypeVar

from ..arith import TruncatedQSeries
from ..exceptions import InvalidIndexError
from ..words import LinComb, deconcat_coproduct
from .stuffle_brackets import eval_stuffle_bracket

logger = logging.getLogger(__name__)

V = TypeVar("V")
Family = Callable[[tuple[int, ...], int], V]


def construction_F(family: Family, word: tuple[int, ...], M: int, one: V) -> V:  # noqa: N802
    """F_w(M) for a family f(w, m) with values in an algebra whose unit is `one`."""
    if M < 1:
        raise InvalidIndexError(f"M must be positive, got {M}")
    word = tuple(word)
    zero = one - one
    prefixes = [word[:i] for i in range(len(word) + 1)]
    # F_u(1) = 0 for every nonempty u
    values = {u: (one if not u else zero) for u in prefixes}
    for m in range(1, M):
        nxt = {}
        for u in prefixes:
            total = zero
            for head, tail in deconcat_coproduct(u):
                factor = one if not tail else family(tail, m)
                total = total + values[head] * factor
            nxt[u] = total
        values = nxt
    return values[word]


def construction_F_lincomb(family: Family, combo: LinComb, M: int, one: V) -> V:  # noqa: N802
    """Linear extension of `construction_F` to combinations of z-words."""
    total = one - one
    for w, c in combo.items():
        total = total + construction_F(family, w, M, one) * c
    return total


def stuffle_bracket_family(precision: int) -> Family:
    """The test family f(w, m) = [w]^*(q^m), a stuffle homomorphism for each m."""

    @lru_cache(maxsize=None)
    def base(word: tuple[int, ...]) -> TruncatedQSeries:
        return eval_stuffle_bracket(LinComb.of(word), precision)

    def family(word: tuple[int, ...], m: int) -> TruncatedQSeries:
        return base(tuple(word)).substitute_power(m)

    return family

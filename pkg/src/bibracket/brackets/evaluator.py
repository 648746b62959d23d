"""q-expansions of bi-brackets and tri-brackets.

    mb{s_1..s_l}{r_1..r_l} = sum_{u_1 > ... > u_l > 0, v_j > 0}
        prod_j u_j^r_j / r_j! * v_j^(s_j - 1) / (s_j - 1)! * q^(u_j v_j)

Two independent paths compute the same truncated series: an oracle that lists
every (u, v) pair of total size <= N, and a nested-sum sweep that runs once
over u = 1..N and keeps one running prefix sum per depth. Both work in integers
and divide by prod r_j! (s_j - 1)! at the end.
"""

import logging
import threading
import time
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from ..arith import TruncatedQSeries, factorial
from ..config import get_settings
from ..exceptions import InvalidIndexError
from ..words import BiWord, LinComb

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriIndex:
    """Index (s, r, e) of a tri-bracket; e = (1, ..., 1) is the bi-bracket of (s, r)."""

    s: tuple[int, ...]
    r: tuple[int, ...]
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "e", tuple(self.e))
        if not len(self.s) == len(self.r) == len(self.e):
            raise InvalidIndexError(f"tri-index lists differ in length: {self}")
        if any(x < 1 for x in self.s) or any(x < 0 for x in self.r) or any(x < 1 for x in self.e):
            raise InvalidIndexError(f"tri-index needs s >= 1, r >= 0, e >= 1: {self}")

    @classmethod
    def from_word(cls, word: BiWord) -> "TriIndex":
        return cls(word.s, word.r, (1,) * len(word))

    def __len__(self) -> int:
        return len(self.s)


def _normalizer(s: Sequence[int], r: Sequence[int]) -> int:
    return prod(factorial(a - 1) * factorial(b) for a, b in zip(s, r))


def _to_series(values: list[int], denominator: int) -> TruncatedQSeries:
    return TruncatedQSeries(tuple(Fraction(v, denominator) for v in values))


# --- oracle -------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _partition_pairs(depth: int, precision: int) -> tuple[tuple[int, tuple, tuple], ...]:
    """Every (n, u, v) with u_1 > ... > u_depth > 0, v_j > 0 and n = sum u_j v_j <= precision."""
    out: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []

    def walk(j: int, upper: int, budget: int, us: tuple, vs: tuple) -> None:
        if j == depth:
            out.append((precision - budget, us, vs))
            return
        left = depth - j - 1
        # the remaining parts need at least 1 + 2 + ... + left
        reserve = left * (left + 1) // 2
        for u in range(left + 1, upper):
            if u + reserve > budget:
                break
            for v in range(1, (budget - reserve) // u + 1):
                walk(j + 1, u, budget - u * v, us + (u,), vs + (v,))

    walk(0, precision + 1, precision, (), ())
    return tuple(out)


def eval_bibracket_oracle(word: BiWord, precision: int) -> TruncatedQSeries:
    """Evaluate a bi-bracket by enumerating its weighted partition sum directly."""
    if not word:
        return TruncatedQSeries.one(precision)
    s, r = word.s, word.r
    values = [0] * (precision + 1)
    for n, us, vs in _partition_pairs(len(word), precision):
        values[n] += prod(u**b * v ** (a - 1) for u, v, a, b in zip(us, vs, s, r))
    return _to_series(values, _normalizer(s, r))


# --- nested-sum sweep ---------------------------------------------------------------


def _sweep(tri: TriIndex, precision: int) -> list[int]:
    """Integer coefficients of prod r_j!(s_j-1)! times the tri-bracket."""
    n = precision
    depth = len(tri)
    # acc[j][k]: coefficient of q^k in the sum over all u_j..u_l chains with u_j below the cursor
    acc = [[0] * (n + 1) for _ in range(depth)]
    for u in range(1, n + 1):
        fresh: list[list[int] | None] = [None] * depth
        for j in range(depth - 1, -1, -1):
            s, r, e = tri.s[j], tri.r[j], tri.e[j]
            inner = acc[j + 1] if j + 1 < depth else None
            if inner is not None and not any(inner):
                continue
            weight_u = u**r
            row = [0] * (n + 1)
            for v in range(e, n // u + 1):
                base = u * v
                c = weight_u * comb(v - 1, e - 1) * v ** (s - 1)
                if inner is None:
                    row[base] += c
                    continue
                for k in range(0, n - base + 1):
                    x = inner[k]
                    if x:
                        row[base + k] += c * x
            fresh[j] = row
        for j, row in enumerate(fresh):
            if row is not None:
                target = acc[j]
                for k, x in enumerate(row):
                    if x:
                        target[k] += x
    return acc[0]


class Evaluator:
    """Evaluates bi-brackets and tri-brackets to a fixed precision, caching by index.

    Cached values never depend on evaluation order; the lock only guards the cache
    dictionary so one instance can be shared between threads.
    """

    def __init__(self, precision: int):
        if precision < 1:
            raise InvalidIndexError(f"precision must be positive, got {precision}")
        self.precision = precision
        self._cache: dict[TriIndex, TruncatedQSeries] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def tribracket(self, tri: TriIndex) -> TruncatedQSeries:
        if len(tri) == 0:
            return TruncatedQSeries.one(self.precision)
        with self._lock:
            cached = self._cache.get(tri)
            if cached is not None:
                self.hits += 1
                return cached
            self.misses += 1
        start = time.perf_counter()
        values = _sweep(tri, self.precision)
        series = _to_series(values, _normalizer(tri.s, tri.r))
        logger.debug(
            f"Evaluated {tri} at N={self.precision} in {time.perf_counter() - start:.4f}s"
        )
        with self._lock:
            self._cache.setdefault(tri, series)
        return series

    def bibracket(self, word: BiWord) -> TruncatedQSeries:
        return self.tribracket(TriIndex.from_word(word))

    def lincomb(self, combo: LinComb) -> TruncatedQSeries:
        total = [Fraction(0)] * (self.precision + 1)
        for word, c in combo.items():
            for k, x in enumerate(self.bibracket(word).coeffs):
                if x:
                    total[k] += c * x
        return TruncatedQSeries(tuple(total))

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self.hits = self.misses = 0


_evaluators: dict[int, Evaluator] = {}
_evaluators_lock = threading.Lock()


def get_evaluator(precision: int | None = None) -> Evaluator:
    """Get the shared evaluator for a precision (defaults to the configured one)."""
    if precision is None:
        precision = get_settings().precision
    with _evaluators_lock:
        evaluator = _evaluators.get(precision)
        if evaluator is None:
            evaluator = Evaluator(precision)
            _evaluators[precision] = evaluator
        return evaluator


def clear_evaluators() -> None:
    with _evaluators_lock:
        _evaluators.clear()
    _partition_pairs.cache_clear()


def eval_bibracket(word: BiWord, precision: int | None = None) -> TruncatedQSeries:
    """q-expansion of a bi-bracket up to q^precision."""
    return get_evaluator(precision).bibracket(word)


def eval_tribracket(tri: TriIndex, precision: int | None = None) -> TruncatedQSeries:
    """q-expansion of a tri-bracket up to q^precision."""
    return get_evaluator(precision).tribracket(tri)


def eval_lincomb(combo: LinComb, precision: int | None = None) -> TruncatedQSeries:
    """Linear extension of `eval_bibracket`; the empty word evaluates to 1."""
    return get_evaluator(precision).lincomb(combo)

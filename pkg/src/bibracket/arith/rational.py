"""Exact rational helpers: Bernoulli numbers, binomials and factorials.

Scalars are `fractions.Fraction` throughout; they are kept in lowest terms with
a positive denominator by construction.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..exceptions import InvalidIndexError

Rational = Fraction


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n via Akiyama-Tanigawa (which yields B_1 = +1/2)."""
    a = [Fraction(0)] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = Fraction(-1, 2)
    return tuple(out)


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Return B_k with the convention X/(e^X - 1) = sum B_n X^n / n!, so B_1 = -1/2."""
    if k < 0:
        raise InvalidIndexError(f"Bernoulli index must be >= 0, got {k}")
    if k >= 3 and k % 2 == 1:
        return Fraction(0)
    # Build in blocks so neighbouring requests share one table
    size = max(16, 1 << (k.bit_length()))
    return _bernoulli_table(size)[k]


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient, 0 when k < 0 or k > n >= 0.

    Negative n uses the polynomial extension n(n-1)...(n-k+1)/k!.
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(comb(n, k)) if k <= n else Fraction(0)
    num = 1
    for i in range(k):
        num *= n - i
    return Fraction(num, factorial(k))


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    """n! as an exact integer."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return 1 if n < 2 else n * factorial(n - 1)


def sigma(k: int, n: int) -> int:
    """Divisor power sum sum_{d | n} d^k."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


@lru_cache(maxsize=None)
def lambda_coefficient(j: int, a: int, b: int) -> Fraction:
    """The number (-1)^(b-1) binom(a+b-j-1, a-j) B_(a+b-j) / (a+b-j)! used by the bi-stuffle."""
    m = a + b - j
    sign = -1 if (b - 1) % 2 else 1
    return sign * binomial(m - 1, a - j) * bernoulli(m) / factorial(m)


def beta(k: int) -> Fraction:
    """Constant term -B_k / (2 k!) of the normalized Eisenstein series of weight k."""
    return -Fraction(1, 2) * bernoulli(k) / factorial(k)

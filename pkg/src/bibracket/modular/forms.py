"""Eisenstein series, the discriminant, and Rankin-Cohen brackets as bracket combinations."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..arith import TruncatedQSeries, beta, binomial, factorial
from ..brackets import eval_bibracket, eval_lincomb
from ..double_shuffle import stuffle_mul_lincomb
from ..exceptions import InvalidIndexError
from ..words import BiWord, LinComb

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QModForm:
    """A quasi-modular form: weight, q-expansion and its bracket expression.

    `symbolic` carries the constant term on the empty word, so the series is
    always the evaluation of `symbolic`.
    """

    weight: int
    series: TruncatedQSeries
    symbolic: LinComb

    @classmethod
    def from_symbolic(cls, weight: int, symbolic: LinComb, precision: int) -> "QModForm":
        return cls(weight, eval_lincomb(symbolic, precision), symbolic)

    @property
    def constant(self) -> Fraction:
        return self.symbolic.coefficient(BiWord())

    @property
    def precision(self) -> int:
        return self.series.precision

    def __add__(self, other: "QModForm") -> "QModForm":
        if self.weight != other.weight:
            raise InvalidIndexError(f"cannot add forms of weights {self.weight} and {other.weight}")
        return QModForm(self.weight, self.series + other.series, self.symbolic + other.symbolic)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QModForm(self.weight, self.series.scale(other), self.symbolic.scale(other))
        return QModForm(
            self.weight + other.weight,
            self.series * other.series,
            stuffle_mul_lincomb(self.symbolic, other.symbolic),
        )

    __rmul__ = __mul__


def eisenstein(k: int, precision: int) -> QModForm:
    """G_k = beta_k + [k], with beta_k = -B_k / (2 k!)."""
    if k < 2 or k % 2:
        raise InvalidIndexError(f"Eisenstein weight must be even and >= 2, got {k}")
    symbolic = LinComb({BiWord(): beta(k), BiWord.from_indices([k]): 1})
    return QModForm.from_symbolic(k, symbolic, precision)


def delta_series(precision: int) -> TruncatedQSeries:
    """q prod_{n >= 1} (1 - q^n)^24."""
    euler = [0] * (precision + 1)
    euler[0] = 1
    for n in range(1, precision + 1):
        # multiply by (1 - q^n) in place, high degrees first
        for k in range(precision, n - 1, -1):
            euler[k] -= euler[k - n]
    base = TruncatedQSeries.from_coefficients(euler, precision)
    return (base**24).shift(1)


def _dq_power(series: TruncatedQSeries, times: int) -> TruncatedQSeries:
    for _ in range(times):
        series = series.dq()
    return series


def rankin_cohen(f: QModForm, g: QModForm, n: int) -> TruncatedQSeries:
    """(f, g)_n = sum_{a+b=n} (-1)^a binom(k+n-1, b) binom(l+n-1, a) d^a f d^b g."""
    if n < 0:
        raise InvalidIndexError(f"Rankin-Cohen index must be >= 0, got {n}")
    k, ell = f.weight, g.weight
    precision = min(f.precision, g.precision)
    total = TruncatedQSeries.zero(precision)
    for a in range(n + 1):
        b = n - a
        sign = -1 if a % 2 else 1
        coeff = sign * binomial(k + n - 1, b) * binomial(ell + n - 1, a)
        total = total + (_dq_power(f.series, a) * _dq_power(g.series, b)).scale(coeff)
    return total


def gamma(k: int, ell: int, n: int) -> Fraction:
    """(k-1+n)!/(k-1)! * (l-1+n)!/(l-1)!, so that (G_k, G_l)_n = gamma * C^(2n)_(k,l) for n >= 1."""
    return Fraction(
        factorial(k - 1 + n) * factorial(ell - 1 + n), factorial(k - 1) * factorial(ell - 1)
    )


def cusp_bracket_symbolic(k: int, ell: int, n: int) -> LinComb:
    """C^(2n)_(k,l) as a combination of bi-brackets (products expanded by the stuffle)."""
    if k < 4 or ell < 4 or k % 2 or ell % 2 or n < 1:
        raise InvalidIndexError(f"need even k, l >= 4 and n >= 1, got ({k}, {ell}, {n})")

    def mb(s: int, r: int) -> LinComb:
        return LinComb.of(BiWord.from_indices([s], [r]))

    sign_n = -1 if n % 2 else 1
    combo = mb(ell + n, n).scale(beta(k)) + mb(k + n, n).scale(sign_n * beta(ell))
    for a in range(n + 1):
        sign = -1 if a % 2 else 1
        combo = combo + stuffle_mul_lincomb(mb(k + a, a), mb(ell + n - a, n - a)).scale(sign)
    return combo


def cusp_bracket_C(k: int, ell: int, n: int, precision: int) -> TruncatedQSeries:  # noqa: N802
    """C^(2n)_(k,l) = beta_k mb{l+n}{n} + (-1)^n beta_l mb{k+n}{n}
    + sum_{a+b=n} (-1)^a mb{k+a}{a} mb{l+b}{b}, evaluated as a q-series."""
    if k < 4 or ell < 4 or k % 2 or ell % 2 or n < 1:
        raise InvalidIndexError(f"need even k, l >= 4 and n >= 1, got ({k}, {ell}, {n})")

    def mb(s: int, r: int) -> TruncatedQSeries:
        return eval_bibracket(BiWord.from_indices([s], [r]), precision)

    sign_n = -1 if n % 2 else 1
    total = mb(ell + n, n).scale(beta(k)) + mb(k + n, n).scale(sign_n * beta(ell))
    for a in range(n + 1):
        sign = -1 if a % 2 else 1
        total = total + (mb(k + a, a) * mb(ell + n - a, n - a)).scale(sign)
    return total


def quasi_modular_monomials(k: int, precision: int) -> dict[tuple[int, int, int], QModForm]:
    """All products G_2^a G_4^b G_6^c of weight k."""
    g2, g4, g6 = (eisenstein(w, precision) for w in (2, 4, 6))
    out = {}
    for c in range(k // 6 + 1):
        for b in range((k - 6 * c) // 4 + 1):
            rest = k - 6 * c - 4 * b
            if rest % 2:
                continue
            a = rest // 2
            form = QModForm.from_symbolic(0, LinComb.of(BiWord()), precision)
            for base, times in ((g2, a), (g4, b), (g6, c)):
                for _ in range(times):
                    form = form * base
            out[(a, b, c)] = form
    return out

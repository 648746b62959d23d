"""Executable checks of the quasi-modular and cusp-form identities among bi-brackets."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from ..arith import TruncatedQSeries, factorial
from ..brackets import eval_bibracket, eval_lincomb
from ..double_shuffle import shuffle_mul, stuffle_mul
from ..words import BiWord, LinComb, format_lincomb
from .forms import cusp_bracket_C, delta_series, eisenstein, gamma, rankin_cohen

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Outcome of one identity check."""

    name: str
    passed: bool
    detail: str = ""
    error: str | None = None

    @classmethod
    def failure(cls, name: str, error: str) -> "CheckResult":
        return cls(name=name, passed=False, error=error)


def _word(*indices: int, lower: tuple[int, ...] | None = None) -> BiWord:
    return BiWord.from_indices(indices, lower)


def weight8_relation() -> LinComb:
    """[8] - 1/40 [4] + 1/252 [2] - 12 [4,4], which evaluates to zero."""
    return LinComb(
        {
            _word(8): 1,
            _word(4): Fraction(-1, 40),
            _word(2): Fraction(1, 252),
            _word(4, 4): -12,
        }
    )


def double_shuffle_difference(u: BiWord, v: BiWord) -> LinComb:
    """u sh v - u st v, a combination whose q-expansion vanishes."""
    return shuffle_mul(u, v) - stuffle_mul(u, v)


def weight8_certificate() -> LinComb:
    """-4 ds([3],[5]) + 3 ds([4],[4]): the weight-8 relation from double shuffle alone."""
    first = double_shuffle_difference(_word(3), _word(5))
    second = double_shuffle_difference(_word(4), _word(4))
    return first.scale(-4) + second.scale(3)


def proportionality(a: LinComb, b: LinComb) -> Fraction | None:
    """The scalar c with a = c b, or None when there is none (b must be nonzero)."""
    if not b:
        return None
    word, coeff = next(iter(b.items()))
    ratio = a.coefficient(word) / coeff
    return ratio if a == b.scale(ratio) else None


def weight12_relation(precision: int) -> tuple[TruncatedQSeries, TruncatedQSeries]:
    """Both sides of the weight-12 bi-bracket relation coming from the two expressions of Delta."""

    def mb(s: int, r: int) -> TruncatedQSeries:
        return eval_bibracket(_word(s, lower=(r,)), precision)

    lhs = (
        (mb(5, 1) * mb(6, 0)).scale(7)
        - (mb(4, 0) * mb(7, 1)).scale(7)
        + (mb(4, 0) * mb(6, 2)).scale(4)
        - (mb(5, 1) * mb(5, 1)).scale(2)
    )
    rhs = (
        mb(7, 1).scale(Fraction(7, 1440))
        - mb(6, 2).scale(Fraction(1, 360))
        + mb(5, 1).scale(Fraction(1, 8640))
    )
    return lhs, rhs


def _series_check(name: str, lhs: TruncatedQSeries, rhs: TruncatedQSeries) -> CheckResult:
    diff = lhs - rhs
    if diff.is_zero():
        return CheckResult(name=name, passed=True, detail=f"equal up to q^{diff.precision}")
    n = diff.leading_index()
    return CheckResult.failure(name, f"first difference at q^{n}: {diff.coeff(n)}")


def verify_modular_suite(precision: int) -> list[CheckResult]:
    """Run every identity at the given precision; one result per identity."""
    g2, g4, g6, g8 = (eisenstein(k, precision) for k in (2, 4, 6, 8))
    delta = delta_series(precision)
    norm_44 = 12 * factorial(5) ** 2

    # name -> thunk returning (lhs, rhs)
    series_identities: dict[str, Callable[[], tuple[TruncatedQSeries, TruncatedQSeries]]] = {
        "G4^2 = 7/6 G8": lambda: ((g4 * g4).series, g8.series.scale(Fraction(7, 6))),
        "dG2 = 5 G4 - 2 G2^2": lambda: (
            g2.series.dq(),
            (g4 * 5).series - (g2 * g2 * 2).series,
        ),
        "dG4 = 14 G6 - 8 G2 G4": lambda: (
            g4.series.dq(),
            (g6 * 14).series - (g2 * g4 * 8).series,
        ),
        "dG6 = 120/7 G4^2 - 12 G2 G6": lambda: (
            g6.series.dq(),
            (g4 * g4 * Fraction(120, 7)).series - (g2 * g6 * 12).series,
        ),
        "weight-8 relation": lambda: (
            eval_lincomb(weight8_relation(), precision),
            TruncatedQSeries.zero(precision),
        ),
        "Delta = 12 (5!)^2 C^4_(4,4)": lambda: (
            delta,
            cusp_bracket_C(4, 4, 2, precision).scale(norm_44),
        ),
        "Delta = 12 (5!)^2 / gamma (G4, G4)_2": lambda: (
            delta,
            rankin_cohen(g4, g4, 2).scale(norm_44 / gamma(4, 4, 2)),
        ),
        "Delta = 5! 7! C^2_(4,6)": lambda: (
            delta,
            cusp_bracket_C(4, 6, 1, precision).scale(factorial(5) * factorial(7)),
        ),
        "weight-12 bi-bracket relation": lambda: weight12_relation(precision),
    }

    def certificate_check() -> CheckResult:
        name = "weight-8 relation from double shuffle"
        certificate = weight8_certificate()
        if certificate != weight8_relation():
            ratio = proportionality(certificate, weight8_relation())
            return CheckResult.failure(
                name, f"certificate is {ratio} * relation: {format_lincomb(certificate)}"
            )
        return CheckResult(name=name, passed=True, detail="certificate = relation")

    checks: list[tuple[str, Callable[[], CheckResult]]] = [
        (name, lambda name=name, thunk=thunk: _series_check(name, *thunk()))
        for name, thunk in series_identities.items()
    ]
    checks.append(("weight-8 relation from double shuffle", certificate_check))

    results = []
    for name, run in checks:
        try:
            result = run()
        except Exception as e:  # a crashing check is a failed check
            logger.error(f"Check {name!r} raised: {e}")
            result = CheckResult.failure(name, str(e))
        logger.info(f"{'PASS' if result.passed else 'FAIL'} {name}")
        results.append(result)
    return results

"""Reference counting sequences for the dimension and relation tables."""

from collections.abc import Sequence

from ..exceptions import InvalidIndexError


def rational_coefficients(
    numerator: Sequence[int], denominator: Sequence[int], kmax: int
) -> list[int]:
    """Coefficients of X^0..X^kmax in numerator/denominator, with denominator[0] = 1."""
    if kmax < 0:
        raise InvalidIndexError(f"kmax must be nonnegative, got {kmax}")
    if not denominator or denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list[int] = []
    for k in range(kmax + 1):
        value = numerator[k] if k < len(numerator) else 0
        for j in range(1, min(k, len(denominator) - 1) + 1):
            value -= denominator[j] * out[k - j]
        out.append(value)
    return out


def dprime_sequence(kmax: int) -> list[int]:
    """d'_0..d'_kmax from (1 - X^2 + X^4) / (1 - 2X^2 - 2X^3).

    Equivalently d'_k = 2 d'_(k-2) + 2 d'_(k-3) for k >= 5 after 1, 0, 1, 2, 3.
    """
    return rational_coefficients([1, 0, -1, 0, 1], [1, 0, -2, -2], kmax)


def d_sequence(kmax: int) -> list[int]:
    """d_0..d_kmax from 1 / (1 - X^2 - X^3)."""
    return rational_coefficients([1], [1, 0, -1, -1], kmax)


def gen_count(k: int) -> int:
    """Number of admissible z-words of weight k: 2^(k-2) for k >= 2, none of weight 1."""
    if k < 0:
        raise InvalidIndexError(f"weight must be nonnegative, got {k}")
    if k == 0:
        return 1
    if k == 1:
        return 0
    return 2 ** (k - 2)


def gen_sequence(kmax: int) -> list[int]:
    return [gen_count(k) for k in range(kmax + 1)]


def cds_count(k: int) -> int:
    """gen_k - d'_k, the conjectured number of relations in weight k."""
    return gen_count(k) - dprime_sequence(k)[k]


SEQUENCES = {
    "dprime": dprime_sequence,
    "d": d_sequence,
    "gen": gen_sequence,
    "cds": lambda kmax: [cds_count(k) for k in range(kmax + 1)],
}

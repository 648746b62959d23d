"""Exact scalars, truncated q-series and bounded multivariate polynomials."""

from .multipoly import MultiPoly
from .rational import (
    Rational,
    bernoulli,
    beta,
    binomial,
    factorial,
    lambda_coefficient,
    sigma,
)
from .series import (
    TruncatedQSeries,
    dq_series,
    format_rational,
    format_series,
    series_ops,
    substitute_power,
)

__all__ = [
    "MultiPoly",
    "Rational",
    "TruncatedQSeries",
    "bernoulli",
    "beta",
    "binomial",
    "dq_series",
    "factorial",
    "format_rational",
    "format_series",
    "lambda_coefficient",
    "series_ops",
    "sigma",
    "substitute_power",
]

"""Quasi-modular forms and cusp-form identities expressed through bi-brackets."""

from .forms import (
    QModForm,
    cusp_bracket_C,
    cusp_bracket_symbolic,
    delta_series,
    eisenstein,
    gamma,
    quasi_modular_monomials,
    rankin_cohen,
)
from .suite import (
    CheckResult,
    double_shuffle_difference,
    proportionality,
    verify_modular_suite,
    weight8_certificate,
    weight8_relation,
    weight12_relation,
)

__all__ = [
    "CheckResult",
    "QModForm",
    "cusp_bracket_C",
    "cusp_bracket_symbolic",
    "delta_series",
    "double_shuffle_difference",
    "eisenstein",
    "gamma",
    "proportionality",
    "quasi_modular_monomials",
    "rankin_cohen",
    "verify_modular_suite",
    "weight12_relation",
    "weight8_certificate",
    "weight8_relation",
]

"""Truncated power series in q with exact rational coefficients."""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import InvalidIndexError

Scalar = int | Fraction


@dataclass(frozen=True)
class TruncatedQSeries:
    """Coefficients a_0..a_N of a power series in q, truncated after q^N.

    Binary operations truncate at the smaller of the two precisions.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # --- construction -------------------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> "TruncatedQSeries":
        return cls((Fraction(0),) * (precision + 1))

    @classmethod
    def one(cls, precision: int) -> "TruncatedQSeries":
        return cls.constant(1, precision)

    @classmethod
    def constant(cls, value: Scalar, precision: int) -> "TruncatedQSeries":
        return cls((Fraction(value),) + (Fraction(0),) * precision)

    @classmethod
    def from_coefficients(cls, values: Iterable[Scalar], precision: int) -> "TruncatedQSeries":
        """Build from the leading coefficients, padding with zeros up to q^precision."""
        padded = list(values)[: precision + 1]
        padded += [0] * (precision + 1 - len(padded))
        return cls(tuple(padded))

    @classmethod
    def from_function(cls, func: Callable[[int], Scalar], precision: int) -> "TruncatedQSeries":
        """Series whose coefficient of q^n is func(n)."""
        return cls(tuple(func(n) for n in range(precision + 1)))

    # --- inspection ---------------------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        """Coefficient of q^n (0 beyond the truncation)."""
        if 0 <= n <= self.precision:
            return self.coeffs[n]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def leading_index(self) -> int | None:
        """Smallest n with a nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def truncate(self, precision: int) -> "TruncatedQSeries":
        if precision >= self.precision:
            return self
        return TruncatedQSeries(self.coeffs[: precision + 1])

    # --- ring operations ----------------------------------------------------------

    def _coerce(self, other) -> "TruncatedQSeries":
        if isinstance(other, TruncatedQSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedQSeries.constant(other, self.precision)
        return NotImplemented

    def __add__(self, other) -> "TruncatedQSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.precision, other.precision)
        return TruncatedQSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedQSeries":
        return TruncatedQSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "TruncatedQSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedQSeries":
        return (-self) + other

    def scale(self, factor: Scalar) -> "TruncatedQSeries":
        factor = Fraction(factor)
        return TruncatedQSeries(tuple(factor * c for c in self.coeffs))

    def __mul__(self, other) -> "TruncatedQSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        # Skip zero coefficients; bracket series are sparse at small n
        a_support = [i for i in range(n + 1) if a[i]]
        b_support = [j for j in range(n + 1) if b[j]]
        out = [Fraction(0)] * (n + 1)
        for i in a_support:
            ai = a[i]
            for j in b_support:
                if i + j > n:
                    break
                out[i + j] += ai * b[j]
        return TruncatedQSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedQSeries":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedQSeries.one(self.precision)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, m: int) -> "TruncatedQSeries":
        """Multiply by q^m."""
        n = self.precision
        return TruncatedQSeries((Fraction(0),) * min(m, n + 1) + self.coeffs[: max(0, n + 1 - m)])

    # --- endomorphisms ------------------------------------------------------------

    def substitute_power(self, m: int) -> "TruncatedQSeries":
        """The ring endomorphism f(q) -> f(q^m), truncated at the same precision."""
        if m < 1:
            raise InvalidIndexError(f"substitution exponent must be >= 1, got {m}")
        out = [Fraction(0)] * (self.precision + 1)
        for i in range(0, self.precision // m + 1):
            out[i * m] = self.coeffs[i]
        return TruncatedQSeries(tuple(out))

    def dq(self) -> "TruncatedQSeries":
        """The derivation q d/dq."""
        return TruncatedQSeries(tuple(n * c for n, c in enumerate(self.coeffs)))

    # --- display ------------------------------------------------------------------

    def __str__(self) -> str:
        return format_series(self)


def series_ops(a: TruncatedQSeries, b: TruncatedQSeries, op: str = "mul") -> TruncatedQSeries:
    """Apply a named ring operation ("add", "sub" or "mul") to two series."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def substitute_power(f: TruncatedQSeries, m: int) -> TruncatedQSeries:
    return f.substitute_power(m)


def dq_series(f: TruncatedQSeries) -> TruncatedQSeries:
    return f.dq()


def format_rational(value: Fraction) -> str:
    """`p/q` or `p` for integral values."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_series(f: TruncatedQSeries) -> str:
    """Human-readable `a0 + a1*q + a2*q^2 + ... + O(q^(N+1))`."""
    parts: list[str] = []
    for n, c in enumerate(f.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if n == 0:
            body = format_rational(mag)
        else:
            power = "q" if n == 1 else f"q^{n}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        parts.append(f"{sign} {body}")
    parts.append(f"+ O(q^{f.precision + 1})")
    text = " ".join(parts)
    if text.startswith("+ "):
        text = text[2:]
    elif text.startswith("- "):
        text = "-" + text[2:]
    return text

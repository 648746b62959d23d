"""Multivariate polynomials with rational coefficients and a total-degree cap.

Used as scratch space for linear substitutions of generating-function variables;
a product whose total degree exceeds the cap signals a logic error upstream.
Arithmetic is done by `sympy.Poly` over QQ; coefficients come back as Fractions.
"""

from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import QQ, Poly

from ..exceptions import DegreeCapExceeded

Exponents = tuple[int, ...]


@lru_cache(maxsize=None)
def _generators(nvars: int) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f"x0:{nvars}"))


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _to_rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


class MultiPoly:
    """Polynomial in `nvars` commuting variables x0, x1, ... with a degree cap."""

    def __init__(self, nvars: int, cap: int, terms: dict[Exponents, Fraction] | Poly | None = None):
        self.nvars = nvars
        self.cap = cap
        gens = _generators(nvars)
        if isinstance(terms, Poly):
            self.poly = terms
        else:
            rep = {tuple(e): _to_rational(c) for e, c in (terms or {}).items() if c}
            self.poly = Poly.from_dict(rep, *gens, domain=QQ) if rep else Poly(0, *gens, domain=QQ)
        self._check()

    def _check(self) -> None:
        if self.poly.is_zero:
            return
        degree = self.poly.total_degree()
        if degree > self.cap:
            raise DegreeCapExceeded(f"term of degree {degree} exceeds cap {self.cap}")

    # --- construction -------------------------------------------------------------

    @classmethod
    def constant(cls, value, nvars: int, cap: int) -> "MultiPoly":
        return cls(nvars, cap, {(0,) * nvars: Fraction(value)})

    @classmethod
    def linear(cls, coefficients: Sequence, cap: int) -> "MultiPoly":
        """sum_i c_i * x_i."""
        n = len(coefficients)
        terms: dict[Exponents, Fraction] = {}
        for i, c in enumerate(coefficients):
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = Fraction(c)
        return cls(n, cap, terms)

    # --- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly(self.nvars, max(self.cap, other.cap), self.poly + other.poly)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly(self.nvars, max(self.cap, other.cap), self.poly - other.poly)

    def scale(self, factor) -> "MultiPoly":
        return MultiPoly(self.nvars, self.cap, self.poly * _to_rational(factor))

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly(self.nvars, min(self.cap, other.cap), self.poly * other.poly)

    def __pow__(self, exponent: int) -> "MultiPoly":
        return MultiPoly(self.nvars, self.cap, self.poly**exponent)

    # --- queries ------------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        if self.poly.is_zero:
            return {}
        return {e: _to_fraction(c) for e, c in self.poly.terms()}

    def coefficient(self, exps: Exponents) -> Fraction:
        return _to_fraction(self.poly.nth(*exps))

    def derivative(self, i: int) -> "MultiPoly":
        """Partial derivative in the i-th variable."""
        return MultiPoly(self.nvars, self.cap, self.poly.diff(_generators(self.nvars)[i]))

    def substitute_zero(self) -> Fraction:
        """Value at the origin."""
        return self.coefficient((0,) * self.nvars)

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.poly == other.poly

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.terms.items())

    def __repr__(self) -> str:
        return f"MultiPoly({self.poly.as_expr()}, cap={self.cap})"

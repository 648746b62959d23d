"""Exact rational matrices of q-expansion coefficients, with rank and left kernel.

Rows are generators, columns are coefficients of q^0..q^N. Rank and kernel come
from sympy DomainMatrix on rows scaled to integers; the kernel is the left
kernel, i.e. the rational combinations of rows that vanish.
"""

import logging
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..arith import TruncatedQSeries

logger = logging.getLogger(__name__)


@dataclass
class CoeffMatrix:
    """Rows of exact coefficients, each labelled by the generator it came from."""

    labels: list[str]
    rows: list[list[Fraction]]
    columns: list[int] = field(default_factory=list)

    def __post_init__(self):
        if len(self.labels) != len(self.rows):
            raise ValueError("one label per row is required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("row labels must be unique")
        width = len(self.rows[0]) if self.rows else len(self.columns)
        if any(len(row) != width for row in self.rows):
            raise ValueError("all rows must have the same length")
        if not self.columns:
            self.columns = list(range(width))

    @classmethod
    def from_series(
        cls, labels: Sequence[str], series: Sequence[TruncatedQSeries]
    ) -> "CoeffMatrix":
        """Columns q^0..q^N, N the smallest precision among the rows."""
        if not series:
            return cls([], [], [])
        n = min(f.precision for f in series)
        return cls(list(labels), [list(f.coeffs[: n + 1]) for f in series], list(range(n + 1)))

    @classmethod
    def identity(cls, size: int) -> "CoeffMatrix":
        rows = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        return cls([f"e{i}" for i in range(size)], rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)


def _integer_row(row: Sequence[Fraction]) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns the row and the scale factor."""
    scale = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * scale) for x in row], scale


def _domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    """Rows scaled to integers, as a DomainMatrix over ZZ."""
    ints = [_integer_row(row)[0] for row in rows]
    return DomainMatrix.from_list(ints, ZZ) if ints else DomainMatrix([], (0, ncols), ZZ)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def rank(matrix: CoeffMatrix) -> int:
    """Exact rank of the matrix."""
    if not matrix.rows:
        return 0
    return _domain_matrix(matrix.rows, len(matrix.columns)).rank()


def rank_kernel(matrix: CoeffMatrix) -> tuple[int, list[list[Fraction]]]:
    """Rank and a basis of the left kernel {v : sum_i v_i row_i = 0}.

    Kernel vectors are in reduced echelon form with leading coefficient 1.
    """
    n = len(matrix.rows)
    if n == 0:
        return 0, []
    ncols = len(matrix.columns)
    rows = [[Fraction(x) for x in row] for row in matrix.rows]
    scales = [_integer_row(row)[1] for row in rows]
    integer = _domain_matrix(rows, ncols)
    r = integer.rank()
    if r == n:
        logger.debug(f"Matrix {n}x{ncols}: rank {r}, trivial kernel")
        return r, []
    # a kernel vector of the scaled rows is rescaled by the row scales
    null = integer.transpose().to_field().nullspace()
    vectors = [
        [(int(v.numerator) * s, int(v.denominator)) for v, s in zip(vec, scales)]
        for vec in null.to_list()
    ]
    basis = DomainMatrix.from_list(vectors, QQ)
    reduced, pivots = basis.rref()
    kernel = [[_to_fraction(x) for x in row] for row in reduced.to_list()[: len(pivots)]]
    logger.debug(f"Matrix {n}x{ncols}: rank {r}, kernel dimension {len(kernel)}")
    return r, kernel


class StreamingEchelon:
    """Rows inserted one at a time and reduced against the rows kept so far.

    Each kept row is normalized to 1 at its pivot, the largest key under
    `order`; `insert` reports whether the new row raised the rank.
    """

    def __init__(self, order=None):
        self._key = order or (lambda k: k)
        self._basis: dict[Hashable, dict[Hashable, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._basis)

    def reduce(self, vector: dict[Hashable, Fraction]) -> dict[Hashable, Fraction]:
        """The remainder of `vector` after elimination; empty when it lies in the span."""
        v = {k: Fraction(c) for k, c in vector.items() if c}
        while v:
            pivot = max(v, key=self._key)
            row = self._basis.get(pivot)
            if row is None:
                break
            factor = v[pivot]
            for k, c in row.items():
                value = v.get(k, 0) - factor * c
                if value:
                    v[k] = value
                else:
                    v.pop(k, None)
        return v

    def insert(self, vector: dict[Hashable, Fraction]) -> bool:
        v = self.reduce(vector)
        if not v:
            return False
        pivot = max(v, key=self._key)
        inv = 1 / v[pivot]
        self._basis[pivot] = {k: c * inv for k, c in v.items()}
        return True


def sparse_rank(vectors: Iterable[dict[Hashable, Fraction]], order=None) -> int:
    """Rank of sparse rational vectors by streaming elimination on their largest key."""
    echelon = StreamingEchelon(order)
    for v in vectors:
        echelon.insert(v)
    return echelon.rank

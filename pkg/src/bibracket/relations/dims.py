"""Dimensions of graded pieces, linear relations and basis expressions from q-expansions.

All results are lower bounds obtained from finitely many coefficients. Each is
recomputed at a higher precision and flagged unstable when the two disagree.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import repeat

from tqdm import tqdm

from ..arith import TruncatedQSeries
from ..brackets import eval_lincomb
from ..config import get_settings
from ..exceptions import PathMismatchError, PrecisionTooLowError
from ..words import LinComb, linear_sum
from .families import Generator, GeneratorFamily
from .matrix import CoeffMatrix, StreamingEchelon, rank_kernel

logger = logging.getLogger(__name__)


def _evaluate_row(combo: LinComb, precision: int) -> TruncatedQSeries:
    return eval_lincomb(combo, precision)


def evaluate_rows(
    combos: Sequence[LinComb], precision: int, progress: bool = False, desc: str = "Evaluating"
) -> list[TruncatedQSeries]:
    """q-expansions of many combinations, in a process pool when workers > 1."""
    settings = get_settings()
    combos = list(combos)
    if settings.parallel and len(combos) > 1:
        logger.info(f"Evaluating {len(combos)} rows on {settings.workers} workers")
        chunksize = max(1, len(combos) // (4 * settings.workers))
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            results = pool.map(_evaluate_row, combos, repeat(precision), chunksize=chunksize)
            return list(tqdm(results, total=len(combos), desc=desc, disable=not progress))
    return [
        _evaluate_row(c, precision) for c in tqdm(combos, desc=desc, disable=not progress)
    ]


def _require_precision(weight: int, precision: int) -> None:
    if precision < 4 * weight:
        raise PrecisionTooLowError(
            f"precision {precision} is too low for weight {weight}; use at least {4 * weight}"
        )


# --- graded dimensions ------------------------------------------------------------


@dataclass(frozen=True)
class DimensionReport:
    """dim gr_k of the span of a family, with the ranks it was computed from."""

    family: str
    weight: int
    dimension: int
    rank_up_to: int
    precision: int
    stable: bool


def filtration_ranks(
    family: GeneratorFamily, max_weight: int, precision: int, progress: bool = False
) -> list[int]:
    """Rank of the span of all generators of weight <= k, for k = 0..max_weight."""
    echelon = StreamingEchelon()
    ranks = []
    for k in range(max_weight + 1):
        gens = family.generators(k)
        rows = evaluate_rows([c for _, c in gens], precision, progress, desc=f"Weight {k}")
        for f in rows:
            echelon.insert(dict(enumerate(f.coeffs)))
        ranks.append(echelon.rank)
        logger.info(
            f"Family {family.name}: {len(gens)} generators of weight {k}, "
            f"rank up to weight {k} is {echelon.rank} at precision {precision}"
        )
        if echelon.rank == precision + 1:
            logger.warning(f"Rank fills all {precision + 1} columns; raise the precision")
    return ranks


def _graded(ranks: list[int], k: int) -> int:
    return ranks[k] - (ranks[k - 1] if k > 0 else 0)


def graded_dim(k: int, family: GeneratorFamily, precision: int | None = None) -> int:
    """rank(weight <= k) - rank(weight <= k-1): a lower bound for dim gr_k of the span."""
    precision = precision or get_settings().precision
    _require_precision(k, precision)
    ranks = filtration_ranks(family, k, precision)
    return _graded(ranks, k)


def dimension_table(
    family: GeneratorFamily,
    max_weight: int,
    precision: int | None = None,
    progress: bool = False,
) -> list[DimensionReport]:
    """Graded dimensions for k = 0..max_weight, each checked at the stable precision."""
    settings = get_settings()
    precision = precision or settings.precision
    _require_precision(max_weight, precision)
    check_precision = settings.stable_precision(precision)
    ranks = filtration_ranks(family, max_weight, precision, progress)
    check = filtration_ranks(family, max_weight, check_precision, progress)

    reports = []
    for k in range(max_weight + 1):
        dim = _graded(ranks, k)
        # a rank filling every column bounds nothing
        saturated = ranks[k] > precision or check[k] > check_precision
        stable = dim == _graded(check, k) and not saturated
        if saturated:
            logger.warning(f"dim gr_{k} for {family.name}: rank fills all columns")
        elif not stable:
            logger.warning(
                f"dim gr_{k} for {family.name} changed from {dim} to {_graded(check, k)} "
                f"when the precision grew to {check_precision}"
            )
        reports.append(DimensionReport(family.name, k, dim, ranks[k], precision, stable))
    return reports


# --- relations --------------------------------------------------------------------


@dataclass
class RelationReport:
    """Linear relations among the generators of weight <= k.

    Generators are ordered from the highest weight down, so every kernel vector
    expresses its leading generator through later, lower ones.
    """

    family: str
    weight: int
    precision: int
    labels: list[str]
    basis: list[str]
    kernel: list[dict[str, Fraction]]
    ranks: list[int]
    stable: bool = True
    audit_passed: bool = True
    audit_errors: list[str] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _kernel_relations(
    labels: list[str], series: list[TruncatedQSeries]
) -> tuple[list[str], list[dict[str, Fraction]]]:
    _, kernel = rank_kernel(CoeffMatrix.from_series(labels, series))
    pivots = {next(i for i, x in enumerate(v) if x) for v in kernel}
    basis = [label for i, label in enumerate(labels) if i not in pivots]
    relations = [{labels[i]: x for i, x in enumerate(v) if x} for v in kernel]
    return basis, relations


def audit_relation(
    relation: dict[str, Fraction], generators: dict[str, LinComb], precision: int
) -> bool:
    """True when sum_i c_i g_i evaluates to the zero series."""
    combo = linear_sum(generators[label].scale(c) for label, c in relation.items())
    return eval_lincomb(combo, precision).is_zero()


def _descending(
    family: GeneratorFamily, weight: int, precision: int
) -> tuple[list[Generator], list[TruncatedQSeries], list[int]]:
    """Generators from the highest weight down, their series, and ranks per weight."""
    gens: list[Generator] = []
    series: list[TruncatedQSeries] = []
    echelon = StreamingEchelon()
    ranks = []
    for k in range(weight + 1):
        layer = family.generators(k)
        rows = evaluate_rows([c for _, c in layer], precision)
        for f in rows:
            echelon.insert(dict(enumerate(f.coeffs)))
        ranks.append(echelon.rank)
        gens = layer[::-1] + gens
        series = rows[::-1] + series
    return gens, series, ranks


def find_relations(
    weight: int, family: GeneratorFamily, precision: int | None = None
) -> RelationReport:
    """All linear relations among the family's generators of weight <= `weight`."""
    settings = get_settings()
    precision = precision or settings.precision
    _require_precision(weight, precision)

    gens, series, ranks = _descending(family, weight, precision)
    labels = [label for label, _ in gens]
    basis, kernel = _kernel_relations(labels, series)
    report = RelationReport(
        family=family.name,
        weight=weight,
        precision=precision,
        labels=labels,
        basis=basis,
        kernel=kernel,
        ranks=ranks,
    )

    by_label = dict(gens)
    for relation in kernel:
        if not audit_relation(relation, by_label, precision):
            report.audit_passed = False
            report.audit_errors.append(f"relation on {sorted(relation)} does not vanish")
    if not report.audit_passed:
        logger.error(f"Self-audit failed for {len(report.audit_errors)} relations")

    higher = settings.stable_precision(precision)
    _, check_series, _ = _descending(family, weight, higher)
    _, check = _kernel_relations(labels, check_series)
    report.stable = check == kernel
    if not report.stable:
        logger.warning(
            f"Kernel changed from {len(kernel)} to {len(check)} relations at precision {higher}"
        )
    logger.info(
        f"Family {family.name} up to weight {weight}: {len(gens)} generators, "
        f"{len(kernel)} relations, stable={report.stable}"
    )
    return report


# --- expressing a combination in a basis ------------------------------------------


@dataclass(frozen=True)
class ExpressionResult:
    """target = sum_i coefficients[i] * generators[i], verified up to `precision`."""

    coefficients: tuple[Fraction, ...]
    combination: LinComb
    precision: int
    stable: bool


def _solve(
    target: LinComb, generators: Sequence[LinComb], precision: int
) -> tuple[Fraction, ...] | None:
    rows = evaluate_rows([target, *generators], precision)
    labels = [f"g{i}" for i in range(len(rows))]
    _, kernel = rank_kernel(CoeffMatrix.from_series(labels, rows))
    # in reduced form only the first kernel vector can involve the target row
    for v in kernel:
        if v[0]:
            return tuple(-x / v[0] for x in v[1:])
    return None


def express_in_basis(
    target: LinComb, generators: Sequence[LinComb], precision: int | None = None
) -> ExpressionResult | None:
    """Coefficients writing `target` through `generators`, or None when it is independent."""
    settings = get_settings()
    precision = precision or settings.precision
    coefficients = _solve(target, generators, precision)
    if coefficients is None:
        logger.info(f"Target is independent of {len(generators)} generators at N={precision}")
        return None

    combination = linear_sum(g.scale(c) for g, c in zip(generators, coefficients) if c)
    if not eval_lincomb(target - combination, precision).is_zero():
        raise PathMismatchError("solution does not reproduce the target")

    check = _solve(target, generators, settings.stable_precision(precision))
    stable = check == coefficients
    if not stable:
        logger.warning(
            f"Expression changed at precision {settings.stable_precision(precision)}; "
            "the generators are not separated at this precision"
        )
    return ExpressionResult(coefficients, combination, precision, stable)

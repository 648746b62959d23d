"""Command line entry point."""

import argparse
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass

from .arith import TruncatedQSeries, format_series
from .brackets import eval_bibracket_oracle, eval_lincomb, partition_map_lincomb
from .config import Settings, get_settings
from .double_shuffle import shuffle_bracket, shuffle_mul, stuffle_bracket, stuffle_mul
from .exceptions import USAGE_ERRORS, BiBracketError
from .modular import (
    cusp_bracket_C,
    cusp_bracket_symbolic,
    eisenstein,
    gamma,
    rankin_cohen,
    verify_modular_suite,
)
from .relations import (
    SEQUENCES,
    CommandReport,
    DsVariant,
    bracket_generators,
    dimension_table,
    ds_counts,
    express_in_basis,
    family_names,
    find_relations,
    get_family,
    make_report,
    table_rows,
    to_csv,
    to_latex,
    to_text,
)
from .words import LinComb, format_lincomb, parse_indices, parse_lincomb, parse_word

logger = logging.getLogger(__name__)


def setup_logging(settings: Settings) -> None:
    """Configure file logging plus warnings on stderr. Wipes the log file on each run."""
    log_format = "%(asctime)s | %(levelname)-7s | %(name)s | %(message)s"
    formatter = logging.Formatter(log_format)

    root = logging.getLogger()
    root.setLevel(settings.log_level)
    # drop handlers from an earlier call in the same process
    for handler in [h for h in root.handlers if getattr(h, "_bibracket", False)]:
        root.removeHandler(handler)
        handler.close()

    handlers: list[logging.Handler] = []
    if settings.log_dir is not None:
        settings.log_dir.mkdir(parents=True, exist_ok=True)
        # App log - mode='w' wipes on each run
        app_handler = logging.FileHandler(settings.log_dir / "app.log", mode="w", encoding="utf-8")
        app_handler.setLevel(logging.DEBUG)
        handlers.append(app_handler)

    # stdout stays clean for --json
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.WARNING)
    handlers.append(console)

    for handler in handlers:
        handler.setFormatter(formatter)
        handler._bibracket = True
        root.addHandler(handler)


@dataclass
class Outcome:
    """What a subcommand produced: the report, its text form and an optional table."""

    report: CommandReport
    text: str
    ok: bool = True
    table: tuple[list[int], dict[str, list], dict[str, list[bool]]] | None = None
    caption: str | None = None


def _series_text(label: str, series: TruncatedQSeries) -> str:
    return f"{label} = {format_series(series)}"


# --- brackets and products --------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> Outcome:
    combo = parse_lincomb(args.word)
    if args.oracle:
        series = TruncatedQSeries.zero(args.prec)
        for word, c in combo.items():
            series = series + eval_bibracket_oracle(word, args.prec).scale(c)
    else:
        series = eval_lincomb(combo, args.prec)
    report = make_report(
        "eval",
        [{"word": format_lincomb(combo), "series": [str(c) for c in series.coeffs]}],
        params={"word": args.word, "oracle": args.oracle},
        precision=args.prec,
    )
    return Outcome(report, _series_text(format_lincomb(combo), series))


def cmd_pmap(args: argparse.Namespace) -> Outcome:
    combo = parse_lincomb(args.word)
    image = partition_map_lincomb(combo)
    report = make_report("pmap", [{"word": format_lincomb(combo), "image": format_lincomb(image)}])
    return Outcome(report, f"P({format_lincomb(combo)}) = {format_lincomb(image)}")


def _combo_outcome(
    command: str, label: str, combo: LinComb, args: argparse.Namespace, params: dict
) -> Outcome:
    result = {"label": label, "combination": format_lincomb(combo)}
    lines = [f"{label} = {format_lincomb(combo)}"]
    if args.series:
        series = eval_lincomb(combo, args.prec)
        result["series"] = [str(c) for c in series.coeffs]
        lines.append(_series_text(label, series))
    report = make_report(command, [result], params, args.prec if args.series else None)
    return Outcome(report, "\n".join(lines))


def cmd_product(args: argparse.Namespace) -> Outcome:
    u, v = parse_word(args.u), parse_word(args.v)
    multiply = stuffle_mul if args.mode == "stuffle" else shuffle_mul
    combo = multiply(u, v)
    symbol = "st" if args.mode == "stuffle" else "sh"
    label = f"{args.u} {symbol} {args.v}"
    params = {"mode": args.mode, "u": args.u, "v": args.v}
    return _combo_outcome("product", label, combo, args, params)


def cmd_bracket(args: argparse.Namespace) -> Outcome:
    indices = parse_indices(args.indices)
    combo = shuffle_bracket(indices) if args.mode == "sh" else stuffle_bracket(indices)
    label = f"[{','.join(map(str, indices))}]^{'sh' if args.mode == 'sh' else '*'}"
    return _combo_outcome("bracket", label, combo, args, {"mode": args.mode, "indices": indices})


# --- modular forms ----------------------------------------------------------------


def cmd_eisenstein(args: argparse.Namespace) -> Outcome:
    form = eisenstein(args.k, args.prec)
    report = make_report(
        "eisenstein",
        [
            {
                "weight": args.k,
                "symbolic": format_lincomb(form.symbolic),
                "series": [str(c) for c in form.series.coeffs],
            }
        ],
        params={"k": args.k},
        precision=args.prec,
    )
    text = f"G_{args.k} = {format_lincomb(form.symbolic)}\n" + _series_text(
        f"G_{args.k}", form.series
    )
    return Outcome(report, text)


def cmd_rankin_cohen(args: argparse.Namespace) -> Outcome:
    f, g = eisenstein(args.k, args.prec), eisenstein(args.l, args.prec)
    series = rankin_cohen(f, g, args.n)
    result = {"series": [str(c) for c in series.coeffs]}
    lines = [_series_text(f"(G_{args.k}, G_{args.l})_{args.n}", series)]
    ok = True
    if args.n >= 1 and min(args.k, args.l) >= 4:
        symbolic = cusp_bracket_symbolic(args.k, args.l, args.n)
        factor = gamma(args.k, args.l, args.n)
        cusp = cusp_bracket_C(args.k, args.l, args.n, args.prec)
        ok = series == cusp.scale(factor)
        result.update(
            {"bracket_form": format_lincomb(symbolic), "gamma": factor, "matches": ok}
        )
        lines.append(f"C = {format_lincomb(symbolic)}")
        lines.append(f"(G_{args.k}, G_{args.l})_{args.n} = {factor} * C: {'yes' if ok else 'NO'}")
    report = make_report(
        "rankin-cohen", [result], {"k": args.k, "l": args.l, "n": args.n}, args.prec
    )
    return Outcome(report, "\n".join(lines), ok=ok)


def cmd_verify(args: argparse.Namespace) -> Outcome:
    checks = verify_modular_suite(args.prec)
    results = [
        {"name": c.name, "passed": c.passed, "detail": c.detail or c.error or ""} for c in checks
    ]
    width = max(len(c.name) for c in checks)
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name.ljust(width)}  {c.detail or c.error or ''}"
        for c in checks
    ]
    ok = all(c.passed for c in checks)
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} identities hold")
    report = make_report("verify", results, {"suite": args.suite}, args.prec, stable=ok)
    return Outcome(report, "\n".join(lines), ok=ok)


# --- relations and tables ---------------------------------------------------------


def cmd_dims(args: argparse.Namespace) -> Outcome:
    family = get_family(args.family)
    reports = dimension_table(family, args.max_weight, args.prec, progress=args.progress)
    ks = [r.weight for r in reports]
    name = f"dim gr_k ({family.name})"
    rows = {name: [r.dimension for r in reports]}
    flags = {name: [r.stable for r in reports]}
    stable = all(r.stable for r in reports)
    report = make_report(
        "dims",
        [
            {"k": r.weight, "dim": r.dimension, "rank": r.rank_up_to, "stable": r.stable}
            for r in reports
        ],
        {"family": family.name, "max_weight": args.max_weight},
        args.prec,
        stable,
    )
    text = to_text(ks, rows, flags)
    if not stable:
        text += "\n? value changed at the higher precision"
    caption = f"Lower bounds for dim gr_k of the span of {family.description}."
    return Outcome(report, text, table=(ks, rows, flags), caption=caption)


def cmd_ds_counts(args: argparse.Namespace) -> Outcome:
    variants = [DsVariant(v) for v in (args.variant or [v.value for v in DsVariant])]
    ks = list(range(1, args.max_weight + 1))
    rows = {v.value + "_k": [ds_counts(k, v, args.reverse) for k in ks] for v in variants}
    report = make_report(
        "ds-counts",
        table_rows(ks, rows),
        {"variants": [v.value for v in variants], "max_weight": args.max_weight},
    )
    caption = "Numbers of double shuffle relations."
    return Outcome(report, to_text(ks, rows), table=(ks, rows, {}), caption=caption)


def cmd_relations(args: argparse.Namespace) -> Outcome:
    family = get_family(args.family)
    found = find_relations(args.weight, family, args.prec)
    results = [{"relation": rel} for rel in found.kernel]
    lines = [
        f"{len(found.labels)} generators of weight <= {found.weight} ({family.description}), "
        f"{len(found.kernel)} relations, basis of size {found.dimension}"
    ]
    for rel in found.kernel:
        combo = " ".join(f"{'+' if c > 0 else '-'} {abs(c)} {label}" for label, c in rel.items())
        lines.append(f"0 = {combo.removeprefix('+ ')}")
    lines.append(f"ranks per weight: {found.ranks}")
    if not found.audit_passed:
        lines.extend(f"audit: {e}" for e in found.audit_errors)
    report = make_report(
        "relations",
        results,
        {"family": family.name, "weight": args.weight, "basis": found.basis, "ranks": found.ranks},
        args.prec,
        found.stable,
    )
    return Outcome(report, "\n".join(lines), ok=found.audit_passed)


def cmd_express(args: argparse.Namespace) -> Outcome:
    target = parse_lincomb(args.target)
    gens = bracket_generators(args.weight, args.max_depth)
    result = express_in_basis(target, [c for _, c in gens], args.prec)
    if result is None:
        report = make_report("express", [{"independent": True}], {"target": args.target}, args.prec)
        return Outcome(report, f"{format_lincomb(target)} is independent of the brackets")
    terms = {label: c for (label, _), c in zip(gens, result.coefficients) if c}
    report = make_report(
        "express",
        [{"independent": False, "coefficients": terms}],
        {"target": args.target, "weight": args.weight, "max_depth": args.max_depth},
        args.prec,
        result.stable,
    )
    return Outcome(report, f"{format_lincomb(target)} = {format_lincomb(result.combination)}")


def cmd_sequences(args: argparse.Namespace) -> Outcome:
    kinds = args.kind or list(SEQUENCES)
    ks = list(range(args.max + 1))
    rows = {f"{kind}_k": SEQUENCES[kind](args.max) for kind in kinds}
    report = make_report(
        "sequences",
        table_rows(ks, rows),
        {"kinds": kinds, "max": args.max},
    )
    return Outcome(report, to_text(ks, rows), table=(ks, rows, {}))


# --- parser -----------------------------------------------------------------------


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--prec",
        type=int,
        default=settings.precision,
        help=f"Truncation N of q-expansions (default: {settings.precision})",
    )
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="Print a JSON report")
    output.add_argument("--csv", action="store_true", help="Print tables as CSV")
    output.add_argument("--latex", action="store_true", help="Print tables as a LaTeX tabular")
    common.add_argument(
        "--strict",
        action="store_true",
        default=settings.strict,
        help="Exit with status 1 when a result is not stable under higher precision",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"Processes for matrix assembly (default: {settings.workers})",
    )

    parser = argparse.ArgumentParser(
        prog="bibracket", description="Exact computations with bi-brackets and their relations"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], Outcome], summary: str):
        p = sub.add_parser(name, parents=[common], help=summary, description=summary)
        p.set_defaults(handler=handler)
        return p

    p = add("eval", cmd_eval, "Print the q-expansion of a bi-bracket combination")
    p.add_argument("word", help='e.g. "[2,1 | 1,0]" or "[4] - 1/40 * [2]"')
    p.add_argument("--oracle", action="store_true", help="Use the direct partition sum")

    p = add("pmap", cmd_pmap, "Apply the partition relation P")
    p.add_argument("word")

    p = add("product", cmd_product, "Stuffle or shuffle product of two bi-words")
    p.add_argument("--mode", choices=["stuffle", "shuffle"], default="stuffle")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--series", action="store_true", help="Also print the q-expansion")

    p = add("bracket", cmd_bracket, "Stuffle or shuffle bracket in bi-brackets")
    p.add_argument("--mode", choices=["ast", "sh"], default="sh")
    p.add_argument("indices", help='e.g. "2,1,1"')
    p.add_argument("--series", action="store_true", help="Also print the q-expansion")

    p = add("eisenstein", cmd_eisenstein, "Eisenstein series G_k as a bracket and a series")
    p.add_argument("k", type=int)

    p = add("rankin-cohen", cmd_rankin_cohen, "Rankin-Cohen bracket of two Eisenstein series")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("n", type=int)

    p = add("verify", cmd_verify, "Run an identity suite")
    p.add_argument("suite", choices=["modular-suite"])

    p = add("dims", cmd_dims, "Graded dimensions of the span of a generator family")
    p.add_argument("--family", choices=family_names(), default="sh")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--progress", action="store_true", help="Show progress bars on stderr")

    p = add("ds-counts", cmd_ds_counts, "Dimensions of double shuffle relation spans")
    p.add_argument("--variant", choices=[v.value for v in DsVariant], action="append")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--reverse", action="store_true", help="Use z_j = y x^(j-1)")

    p = add("relations", cmd_relations, "Linear relations among generators up to a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--family", choices=family_names(), default="sh")

    p = add("express", cmd_express, "Write a combination in terms of brackets")
    p.add_argument("target")
    p.add_argument("--weight", type=int, required=True, help="Largest bracket weight used")
    p.add_argument("--max-depth", type=int, default=None, help="Largest bracket length used")

    p = add("sequences", cmd_sequences, "Reference counting sequences")
    p.add_argument("--kind", choices=list(SEQUENCES), action="append")
    p.add_argument("--max", type=int, required=True)
    return parser


def emit(outcome: Outcome, args: argparse.Namespace) -> None:
    if args.json:
        print(outcome.report.model_dump_json(indent=2))
        return
    if (args.csv or args.latex) and outcome.table is None:
        logger.warning(f"{args.command} has no table output; printing text")
    if args.csv and outcome.table is not None:
        ks, rows, _ = outcome.table
        print(to_csv(ks, rows), end="")
    elif args.latex and outcome.table is not None:
        ks, rows, _ = outcome.table
        print(to_latex(ks, rows, outcome.caption), end="")
    else:
        print(outcome.text)


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand; returns 0 on success, 1 on a failed check, 2 on bad input."""
    settings = get_settings()
    setup_logging(settings)
    parser = build_parser(settings)
    args = parser.parse_args(argv)
    if args.workers is not None:
        settings.workers = args.workers

    logger.info(f"Running {args.command} with {vars(args)}")
    try:
        outcome = args.handler(args)
    except USAGE_ERRORS as e:
        print(f"bibracket {args.command}: {e}", file=sys.stderr)
        return 2
    except BiBracketError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"bibracket {args.command}: {e}", file=sys.stderr)
        return 1

    emit(outcome, args)
    if not outcome.ok:
        logger.info(f"{args.command} finished with failed checks")
        return 1
    if args.strict and not outcome.report.stable:
        print(f"bibracket {args.command}: result is not stable", file=sys.stderr)
        return 1
    logger.info(f"{args.command} finished")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Regenerate the dimension table of shuffle brackets and the double shuffle count table.

Computes lower bounds for dim gr_k of the span of shuffle brackets with
s_1 > 1 (each checked at a higher precision), and eds_k, fds_k, rds_k next to
gen_k, d_k, d'_k and cds_k.

Usage:
    python scripts/reproduce_tables.py --dims-max 7 --ds-max 9
    python scripts/reproduce_tables.py --dims-max 10 --prec 260 --format latex --output tables.tex
"""

import argparse
import sys
from pathlib import Path

from tqdm import tqdm

# Add project root to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bibracket.config import get_settings
from bibracket.main import setup_logging
from bibracket.relations import (
    DsVariant,
    cds_count,
    d_sequence,
    dimension_table,
    dprime_sequence,
    ds_counts,
    gen_count,
    get_family,
    to_csv,
    to_latex,
    to_text,
)


def dims_table(max_weight: int, precision: int) -> tuple[list[int], dict, dict]:
    reports = dimension_table(get_family("sh"), max_weight, precision, progress=True)
    ks = [r.weight for r in reports]
    name = r"\dim gr_k"
    return ks, {name: [r.dimension for r in reports]}, {name: [r.stable for r in reports]}


def ds_table(max_weight: int) -> tuple[list[int], dict]:
    ks = list(range(1, max_weight + 1))
    rows: dict[str, list] = {}
    for variant in DsVariant:
        rows[f"{variant.value}_k"] = [
            ds_counts(k, variant) for k in tqdm(ks, desc=variant.value, unit=" weights")
        ]
    rows["cds_k"] = [cds_count(k) for k in ks]
    rows["gen_k"] = [gen_count(k) for k in ks]
    d = d_sequence(max_weight)
    dprime = dprime_sequence(max_weight)
    rows["d_k"] = [d[k] for k in ks]
    rows["d'_k"] = [dprime[k] for k in ks]
    return ks, rows


def render(ks: list[int], rows: dict, fmt: str, caption: str, flags: dict | None = None) -> str:
    if fmt == "latex":
        return to_latex(ks, rows, caption)
    if fmt == "csv":
        return to_csv(ks, rows)
    return to_text(ks, rows, flags) + "\n"


def main():
    settings = get_settings()
    parser = argparse.ArgumentParser(
        description="Reproduce the dimension and double shuffle tables"
    )
    parser.add_argument(
        "--dims-max",
        type=int,
        default=7,
        help="Largest weight of the dimension table (default: 7)",
    )
    parser.add_argument(
        "--ds-max",
        type=int,
        default=9,
        help="Largest weight of the double shuffle table (default: 9)",
    )
    parser.add_argument(
        "--prec",
        type=int,
        default=settings.precision,
        help=f"Truncation N of the q-expansions (default: {settings.precision})",
    )
    parser.add_argument(
        "--format",
        choices=["text", "latex", "csv"],
        default="text",
        help="Output format (default: text)",
    )
    parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="Write to this file instead of stdout",
    )
    args = parser.parse_args()
    setup_logging(settings)

    print(f"Dimension table up to weight {args.dims_max} at precision {args.prec}...")
    ks, rows, flags = dims_table(args.dims_max, args.prec)
    out = render(ks, rows, args.format, "Lower bounds for dim gr_k of the shuffle brackets.", flags)
    if not all(flags[r"\dim gr_k"]):
        print("Warning: some dimensions changed at the higher precision", file=sys.stderr)

    print(f"Double shuffle counts up to weight {args.ds_max}...")
    ks, rows = ds_table(args.ds_max)
    out += "\n" + render(ks, rows, args.format, "Numbers of double shuffle relations.")

    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
        print(f"Wrote {args.output}")
    else:
        print()
        print(out, end="")


if __name__ == "__main__":
    main()

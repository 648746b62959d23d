"""Report models and table writers for the command line."""

import csv
import io
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from ..arith import format_rational


class CommandReport(BaseModel):
    """Result of one command, as written by --json."""

    command: str = Field(description="Subcommand that produced the report")
    params: dict[str, Any] = Field(default_factory=dict, description="Arguments of the run")
    precision: int | None = Field(default=None, description="Truncation N of the q-expansions")
    results: list[dict[str, Any]] = Field(default_factory=list, description="One entry per result")
    stable: bool = Field(default=True, description="Whether every result survived N + step")


def jsonable(value: Any) -> Any:
    """Exact rationals become "p/q" strings; containers are converted recursively."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def make_report(
    command: str,
    results: list[dict[str, Any]],
    params: dict[str, Any] | None = None,
    precision: int | None = None,
    stable: bool = True,
) -> CommandReport:
    return CommandReport(
        command=command,
        params=jsonable(params or {}),
        precision=precision,
        results=[jsonable(r) for r in results],
        stable=stable,
    )


def table_rows(ks: list[int], rows: dict[str, list]) -> list[dict[str, Any]]:
    """One result per k with a column per named sequence."""
    return [
        {"k": k, **{name: values[i] for name, values in rows.items()}} for i, k in enumerate(ks)
    ]


def to_csv(ks: list[int], rows: dict[str, list]) -> str:
    """CSV with a k column and one column per sequence."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", *rows])
    for i, k in enumerate(ks):
        writer.writerow([k, *(jsonable(values[i]) for values in rows.values())])
    return buffer.getvalue()


def to_latex(ks: list[int], rows: dict[str, list], caption: str | None = None) -> str:
    """A tabular with k across the header and one row per sequence."""
    cols = "c|" + "c|" * len(ks)
    lines = [
        r"\begin{table}[H]\footnotesize",
        r"\begin{center}",
        rf"\begin{{tabular}}{{|{cols}}}\hline",
        "$k$ & " + " & ".join(str(k) for k in ks) + r" \\ \hline",
    ]
    for name, values in rows.items():
        cells = " & ".join(str(jsonable(v)) for v in values)
        lines.append(f"${name}$ & {cells} " + r"\\ \hline")
    lines.append(r"\end{tabular}")
    if caption:
        lines.append(rf"\caption{{{caption}}}")
    lines += [r"\end{center}", r"\end{table}"]
    return "\n".join(lines) + "\n"


def to_text(
    ks: list[int], rows: dict[str, list], flags: dict[str, list[bool]] | None = None
) -> str:
    """Aligned plain-text table; entries flagged False are marked with '?'."""
    width = max([len(name) for name in rows] + [1])
    cell = max([len(str(jsonable(v))) for values in rows.values() for v in values] + [3]) + 1
    lines = ["k".ljust(width) + " |" + "".join(str(k).rjust(cell) for k in ks)]
    lines.append("-" * len(lines[0]))
    for name, values in rows.items():
        marks = (flags or {}).get(name, [True] * len(values))
        body = "".join(
            (str(jsonable(v)) + ("" if ok else "?")).rjust(cell) for v, ok in zip(values, marks)
        )
        lines.append(name.ljust(width) + " |" + body)
    return "\n".join(lines)

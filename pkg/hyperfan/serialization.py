"""Interchange documents and tables.

* Hypergraph documents are one compact JSON object ``{"n", "r", "edges"}``.
  They may be preceded by ``#`` comment lines. Serialization is canonical:
  the same hypergraph always yields the same bytes.
* Perron records are JSON objects. Every float is rounded to 15 significant
  digits.
* Scan and bound tables are CSV files with a ``# hyperfan ...`` header line.
"""

from __future__ import annotations
import csv
import json
import math
from typing import TYPE_CHECKING, Any, TextIO

from pydantic import ValidationError

from .exceptions import ParseError
from .models.hypergraph import UniformHypergraph

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from .models.spectral import PerronResult
    from .models.verify import BoundReport, ScanRecord, ScanSummary

SIGNIFICANT_DIGITS = 15

SCAN_COLUMNS = (
    "rank",
    "triangulation",
    "lambda",
    "gap_to_fan",
    "residual",
    "iterations",
    "is_fan",
    "canonical",
    "tie_class",
    "error",
)
BOUND_COLUMNS = ("n", "lambda_fan", "bound", "ratio", "ok")


def format_float(value: float) -> str:
    """Render with 15 significant digits (``nan``/``inf`` spelled out)."""
    if math.isnan(value):
        return "nan"
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def round_float(value: float) -> float:
    """Round to 15 significant digits."""
    if not math.isfinite(value):
        return value
    return float(format_float(value))


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (list, tuple)):
        return ",".join(_format_value(v) for v in value)  # type: ignore[union-attr]
    return str(value)


def config_header(command: str, **fields: Any) -> str:
    """The ``# hyperfan <command> key=value ...`` line embedded in every artifact."""
    parts = [f"{key}={_format_value(value)}" for key, value in fields.items() if value is not None]
    return " ".join(["# hyperfan", command, *parts])


def dump_hypergraph(hypergraph: UniformHypergraph, header: str | None = None) -> str:
    """Canonical hypergraph document, optionally preceded by a comment header."""
    body = hypergraph.model_dump_json() + "\n"
    return f"{header}\n{body}" if header else body


def load_hypergraph(text: str) -> UniformHypergraph:
    """Parse a hypergraph document.

    Lines starting with ``#`` are comments. They are blanked before decoding
    so that reported line numbers match the input.

    Args:
        text (str): The document.

    Returns:
        UniformHypergraph: The validated hypergraph.

    Raises:
        ParseError: If the JSON is malformed (``details["line"]``) or a field is
            invalid (``details["field"]``).

    """
    lines = ["" if line.lstrip().startswith("#") else line for line in text.splitlines()]
    body = "\n".join(lines)
    if not body.strip():
        msg = "document is empty"
        raise ParseError(msg, {"line": 1})
    try:
        data = json.loads(body)
    except json.JSONDecodeError as e:
        msg = f"malformed JSON: {e.msg}"
        raise ParseError(msg, {"line": e.lineno, "column": e.colno}) from e
    if not isinstance(data, dict):
        msg = "document must be a JSON object"
        raise ParseError(msg, {"field": "$"})
    missing = [key for key in ("n", "edges") if key not in data]
    if missing:
        msg = f"missing field {missing[0]!r}"
        raise ParseError(msg, {"field": missing[0]})
    try:
        return UniformHypergraph.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or "edges"
        msg = f"invalid field {field!r}: {error['msg']}"
        raise ParseError(msg, {"field": field}) from e


def perron_record(result: PerronResult) -> dict[str, Any]:
    """Structured record of a solver result with 15-digit floats."""
    return {
        "lambda": round_float(result.lambda_),
        "bracket_low": round_float(result.bracket_low),
        "bracket_high": round_float(result.bracket_high),
        "residual": round_float(result.residual),
        "iterations": result.iterations,
        "normalization": result.normalization.value,
        "degenerate": result.degenerate,
        "vector": [round_float(v) for v in result.vector],
    }


def dump_perron(result: PerronResult, header: str | None = None) -> str:
    """Perron record as one JSON line, optionally preceded by a comment header."""
    body = json.dumps(perron_record(result)) + "\n"
    return f"{header}\n{body}" if header else body


def write_scan_csv(
    records: Sequence[ScanRecord],
    stream: TextIO,
    header: str | None = None,
    summary: ScanSummary | None = None,
) -> None:
    """Write scan rows as CSV, followed by ``# summary`` comment lines."""
    if header:
        stream.write(header + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for record in records:
        writer.writerow(
            [
                record.rank,
                record.triangulation,
                format_float(record.lambda_),
                format_float(record.gap_to_fan),
                format_float(record.residual),
                record.iterations,
                _format_value(record.is_fan),
                record.canonical,
                record.tie_class,
                record.error or "",
            ],
        )
    if summary is not None:
        for line in summary_lines(summary):
            stream.write(line + "\n")


def summary_lines(summary: ScanSummary) -> list[str]:
    """Comment lines describing a scan summary."""
    top_gap = "none" if summary.top_gap is None else format_float(summary.top_gap)
    return [
        f"# summary raw_count={summary.raw_count} canonical_count={summary.canonical_count}",
        f"# summary lambda_fan={format_float(summary.lambda_fan)} fan_rank_one={_format_value(summary.fan_rank_one)}",
        f"# summary top_gap={top_gap} top_gap_exceeds={_format_value(summary.top_gap_exceeds)}",
        f"# summary violations={len(summary.violations)} failures={summary.failures}",
        *(f"# violation {canonical}" for canonical in summary.violations),
    ]


def write_bound_csv(
    reports: Iterable[BoundReport],
    stream: TextIO,
    header: str | None = None,
) -> None:
    """Write bound reports as CSV."""
    if header:
        stream.write(header + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BOUND_COLUMNS)
    for report in reports:
        writer.writerow(
            [
                report.n,
                format_float(report.lambda_fan),
                format_float(report.bound),
                format_float(report.ratio_to_cbrt4n),
                _format_value(report.ok),
            ],
        )

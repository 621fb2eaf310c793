import csv
import io
import json
from typing import Any, Optional

from ordspeed.config_reader import OutputFormat

SCHEMA_VERSION = 1


def formatting_json(payload: dict[str, Any]) -> str:
    report = {"schema": SCHEMA_VERSION, **payload}
    return json.dumps(report, sort_keys=True, indent=2)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def formatting_csv(rows: list[dict[str, Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    columns = _columns(rows)
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return out.getvalue().rstrip("\n")


def formatting_table(rows: list[dict[str, Any]]) -> str:
    columns = _columns(rows)
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [
        max([len(c)] + [len(line[i]) for line in cells])
        for i, c in enumerate(columns)
    ]
    lines = [
        "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for line in cells:
        lines.append(
            "  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip(),
        )
    return "\n".join(lines)


def formatting_report(
    payload: dict[str, Any],
    output_format: OutputFormat,
    rows: Optional[list[dict[str, Any]]] = None,
) -> str:
    """Render a report; CSV and tables show ``rows`` when given, else the
    payload as key/value pairs."""
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.JSON:
        return formatting_json(payload)
    if rows is None:
        rows = [
            {"key": key, "value": payload[key]} for key in sorted(payload)
        ]
    if output_format == OutputFormat.CSV:
        return formatting_csv(rows)
    return formatting_table(rows)

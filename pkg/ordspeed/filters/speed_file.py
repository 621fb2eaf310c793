import csv
import io
import json

import click

from ordspeed.enumeration import SpeedSequence


def _truthy(value: str) -> bool:
    return value.strip().lower() in ("true", "1", "yes")


def parse_speed_text(text: str) -> SpeedSequence:
    """A count-speed JSON report, its CSV rows, or bare integers."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        data = json.loads(stripped)
        if isinstance(data, list):
            return SpeedSequence.from_counts([int(v) for v in data])
        rows = data["rows"]
        return SpeedSequence(
            counts=[int(row["count"]) for row in rows],
            exact=[bool(row.get("exact", True)) for row in rows],
        )
    first_line = stripped.splitlines()[0] if stripped else ""
    if "count" in first_line:
        rows = list(csv.DictReader(io.StringIO(stripped)))
        return SpeedSequence(
            counts=[int(row["count"]) for row in rows],
            exact=[_truthy(row.get("exact") or "true") for row in rows],
        )
    return SpeedSequence.from_counts(
        [int(token) for token in stripped.replace(",", " ").split()],
    )


class SpeedFile(click.ParamType):
    name = "speed_file"

    def convert(self, value, param, ctx):
        if isinstance(value, SpeedSequence):
            return value
        try:
            with open(value, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            self.fail(f"cannot read {value!r}: {e.strerror}", param, ctx)
        try:
            return parse_speed_text(text)
        except (ValueError, KeyError, TypeError) as e:
            self.fail(f"{value}: malformed speed sequence ({e})", param, ctx)

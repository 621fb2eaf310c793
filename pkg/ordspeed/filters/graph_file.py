import click

from ordspeed.decomposition import blocks_from_json
from ordspeed.exceptions import InputError
from ordspeed.graphs import read_graph


def _read_text(param_type: click.ParamType, value: str, param, ctx) -> str:
    try:
        with open(value, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        param_type.fail(f"cannot read {value!r}: {e.strerror}", param, ctx)


class GraphFile(click.ParamType):
    """Path to a graph in the text format, parsed on conversion."""

    name = "graph_file"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        text = _read_text(self, value, param, ctx)
        try:
            return read_graph(text)
        except InputError as e:
            self.fail(f"{value}: {e}", param, ctx)


class PartitionFile(click.ParamType):
    """Path to a block partition in its compact JSON form."""

    name = "partition_file"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        text = _read_text(self, value, param, ctx)
        try:
            return blocks_from_json(text)
        except InputError as e:
            self.fail(f"{value}: {e}", param, ctx)

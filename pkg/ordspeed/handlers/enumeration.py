from typing import Optional

import click

from ordspeed.enumeration import (CountMethod, PropertySpec,
                                  bounded_matching_forbidden_set,
                                  count_speed, count_subgraphs,
                                  example_block_profile)
from ordspeed.exceptions import InputError
from ordspeed.filters import GraphFile
from ordspeed.graphs import OrderedGraph
from ordspeed.handlers.root import AppContext

EXAMPLES = ("block-profile", "matching")


def _property_spec(
    forbid: tuple[OrderedGraph, ...],
    allow_block: tuple[OrderedGraph, ...],
    host: Optional[OrderedGraph],
    example: Optional[str],
    k: int,
) -> PropertySpec:
    given = [
        name for name, value in (
            ("--forbid", forbid), ("--allow-block", allow_block),
            ("--host", host), ("--example", example),
        ) if value
    ]
    if len(given) > 1:
        raise InputError(
            "property sources conflict", token=" ".join(given),
        )
    if host is not None:
        return PropertySpec.subgraph_closure(host)
    if allow_block:
        return PropertySpec.block_profile(list(allow_block))
    if example == "block-profile":
        return example_block_profile()
    if example == "matching":
        return bounded_matching_forbidden_set(k)
    return PropertySpec.forbidden_set(list(forbid))


@click.command("count-speed")
@click.option(
    "--forbid", type=GraphFile(), multiple=True,
    help="Forbidden graph file (repeatable)",
)
@click.option(
    "--allow-block", type=GraphFile(), multiple=True,
    help="Allowed irreducible block file (repeatable)",
)
@click.option(
    "--host", type=GraphFile(), default=None,
    help="Count the induced subgraphs of this graph",
)
@click.option("--example", type=click.Choice(EXAMPLES), default=None)
@click.option(
    "-k", type=click.IntRange(min=0), default=1,
    help="Edge bound of the matching example",
)
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option(
    "--cross-check", is_flag=True,
    help="Verify block profile counts by enumeration",
)
@click.pass_obj
def count_speed_cmd(
    app: AppContext,
    forbid: tuple[OrderedGraph, ...],
    allow_block: tuple[OrderedGraph, ...],
    host: Optional[OrderedGraph],
    example: Optional[str],
    k: int,
    max_n: int,
    cross_check: bool,
) -> None:
    """Speeds |P_1|, ..., |P_N| of a hereditary property."""
    if max_n > app.config.limits.max_order:
        raise InputError("--max-n exceeds the order limit", token=str(max_n))
    spec = _property_spec(forbid, allow_block, host, example, k)
    seq = count_speed(
        spec, max_n, app.budget(), workers=app.workers,
        cross_check=cross_check,
    )
    rows = [
        {"n": n, "count": count, "exact": exact}
        for n, (count, exact) in enumerate(
            zip(seq.counts, seq.exact), start=1,
        )
    ]
    app.echo_report(
        {"kind": spec.kind.value, "rows": rows, "complete": seq.complete},
        rows,
    )
    app.finish(seq.complete)


@click.command("count-subgraphs")
@click.option("--graph", "g", type=GraphFile(), required=True)
@click.option("-n", "--order", type=click.IntRange(min=1), required=True)
@click.option(
    "--method", type=click.Choice([m.value for m in CountMethod]),
    default=CountMethod.FRONTIER.value,
)
@click.pass_obj
def count_subgraphs_cmd(
    app: AppContext, g: OrderedGraph, order: int, method: str,
) -> None:
    """Distinct induced subgraphs of one order."""
    result = count_subgraphs(g, order, app.budget(), CountMethod(method))
    row = {"n": order, "count": result.count, "exact": result.exact}
    app.echo_report({"host_order": g.n, "method": method, **row}, [row])
    app.finish(result.exact)


def register_enumeration_handlers(cli: click.Group) -> None:
    cli.add_command(count_speed_cmd)
    cli.add_command(count_subgraphs_cmd)

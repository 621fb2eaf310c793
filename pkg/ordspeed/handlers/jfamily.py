from typing import Optional

import click

from ordspeed.decomposition import is_irreducible
from ordspeed.exceptions import InputError
from ordspeed.filters import GraphFile
from ordspeed.graphs import OrderedGraph
from ordspeed.handlers.root import AppContext
from ordspeed.jfamily import (j_identify, min_witness_k, p3p4_classify,
                              verify_p3p4)


def _edges(g: OrderedGraph) -> list[list[int]]:
    return [list(e) for e in g.edges()]


@click.command("jfamily")
@click.option("--graph", "g", type=GraphFile(), default=None)
@click.option(
    "--ell", type=click.IntRange(min=1), default=None,
    help="Also report the minimal (k, ell)-witness runs",
)
@click.option(
    "--verify-order", type=click.IntRange(min=1, max=7), default=None,
    help="Check the small subgraph classification on all graphs",
)
@click.pass_obj
def jfamily_cmd(
    app: AppContext, g: Optional[OrderedGraph], ell: Optional[int],
    verify_order: Optional[int],
) -> None:
    """J-family class, small subgraph witness and witness runs."""
    if verify_order is not None:
        summary = verify_p3p4(verify_order, app.workers)
        app.echo_report({**summary.dict(), "holds": summary.holds})
        return
    if g is None:
        raise InputError("--graph or --verify-order is required")

    j_class = j_identify(g)
    payload = {
        "order": g.n,
        "irreducible": is_irreducible(g),
        "j_class": j_class.dict() if j_class else None,
    }
    if payload["irreducible"]:
        result = p3p4_classify(g)
        if result.witness is not None:
            first, second = result.witness
            payload["witness"] = {
                "graphs": [_edges(first), _edges(second)],
                "order": first.n,
                "vertices": [list(v) for v in result.witness_vertices],
            }
    if ell is not None:
        payload["witness_set"] = min_witness_k(g, ell).dict()
    app.echo_report(payload)


def register_jfamily_handlers(cli: click.Group) -> None:
    cli.add_command(jfamily_cmd)

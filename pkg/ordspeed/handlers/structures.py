import click

from ordspeed.filters import GraphFile
from ordspeed.graphs import OrderedGraph, complement
from ordspeed.handlers.root import AppContext
from ordspeed.structures import (certify_partition, max_type1_k, max_type2_k,
                                 max_type3_k)


@click.command("detect")
@click.option("--graph", "g", type=GraphFile(), required=True)
@click.option("--ell", type=click.IntRange(min=1), default=1)
@click.option("--complement", "take_complement", is_flag=True)
@click.pass_obj
def detect_cmd(
    app: AppContext, g: OrderedGraph, ell: int, take_complement: bool,
) -> None:
    """Largest Type 1, 2 and 3 structures with witnesses."""
    if take_complement:
        g = complement(g)
    detections = {
        "type1": max_type1_k(g),
        "type2": max_type2_k(g),
        "type3": max_type3_k(g, ell),
    }
    payload = {
        "order": g.n,
        "ell": ell,
        "complemented": take_complement,
        **{name: d.dict() for name, d in detections.items()},
    }
    rows = [
        {
            "structure": name,
            "k": d.k,
            "variant": d.witness.variant.value if d.witness else None,
        }
        for name, d in detections.items()
    ]
    app.echo_report(payload, rows)


@click.command("certify")
@click.option("--graph", "g", type=GraphFile(), required=True)
@click.option("-k", type=click.IntRange(min=1), required=True)
@click.option("--ell", type=click.IntRange(min=1), default=1)
@click.option("--complement", "take_complement", is_flag=True)
@click.option(
    "--no-shortcut", is_flag=True,
    help="Skip the greedy partition and run the full extraction",
)
@click.pass_obj
def certify_cmd(
    app: AppContext, g: OrderedGraph, k: int, ell: int,
    take_complement: bool, no_shortcut: bool,
) -> None:
    """A small ell-homogeneous partition or a size-k structure."""
    if take_complement:
        g = complement(g)
    certificate = certify_partition(g, k, ell, shortcut=not no_shortcut)
    payload = {"order": g.n, **certificate.dict()}
    if certificate.partition is not None:
        rows = [
            {"block": i, "start": start, "stop": stop}
            for i, (start, stop) in enumerate(
                certificate.partition.blocks, start=1,
            )
        ]
    else:
        witness = certificate.witness
        rows = [{
            "variant": witness.variant.value,
            "y": witness.y,
            "xs": witness.xs,
            "ys": witness.ys,
        }]
    app.echo_report(payload, rows)


def register_structure_handlers(cli: click.Group) -> None:
    cli.add_command(detect_cmd)
    cli.add_command(certify_cmd)

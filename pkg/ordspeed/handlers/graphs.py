from typing import Optional

import click
from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition import (BlockPartition, block_sequence,
                                    blocks_to_json, homogeneous_blocks,
                                    irreducible_decomposition, k_type_graph,
                                    min_l_homogeneous_partition,
                                    partition_is_homogeneous,
                                    partition_payload)
from ordspeed.exceptions import InputError
from ordspeed.filters import (BitString, GraphFile, IntegerList,
                              PartitionFile)
from ordspeed.graphs import (GraphKind, OrderedGraph, Orientation,
                             Permutation, Side, complement, gen_basic, gen_M,
                             gen_permutation_graph, gen_somebases_prefix,
                             gen_type1_host, gen_type3_host, write_graph,
                             write_looped_graph)
from ordspeed.handlers.root import AppContext

logger: BoundLogger = get_logger()

CONSTRUCTIONS = ("M", "perm", "type1", "type3", "somebases")


def _generate(
    kind: str, order: int, bits, m: int, orientation: str, perm,
    k: int, side: str, ell: int, s: int, coeffs, length: Optional[int],
) -> OrderedGraph:
    if kind == "M":
        if bits is None:
            raise InputError("--bits is required for M", token=kind)
        return gen_M(bits, m, Orientation(orientation))
    if kind == "perm":
        if perm is None:
            raise InputError("--perm is required for perm", token=kind)
        return gen_permutation_graph(Permutation(values=perm))
    if kind == "type1":
        return gen_type1_host(k, Side(side))
    if kind == "type3":
        return gen_type3_host(ell, s)
    if kind == "somebases":
        if coeffs is None:
            raise InputError("--coeffs is required for somebases", token=kind)
        return gen_somebases_prefix(coeffs, length or order)
    return gen_basic(GraphKind(kind), order)


@click.command("gen")
@click.option(
    "--kind", required=True,
    type=click.Choice([k.value for k in GraphKind] + list(CONSTRUCTIONS)),
)
@click.option("-n", "--order", type=click.IntRange(min=1), default=1)
@click.option("--bits", type=BitString(), default=None, help="M: e.g. 0110")
@click.option("-m", type=click.IntRange(min=1), default=1, help="M: pairs")
@click.option(
    "--orientation", type=click.Choice([o.value for o in Orientation]),
    default=Orientation.INCREASING.value,
)
@click.option("--perm", type=IntegerList(), default=None)
@click.option("-k", type=click.IntRange(min=1), default=1)
@click.option(
    "--side", type=click.Choice([s.value for s in Side]),
    default=Side.LEFT.value,
)
@click.option("--ell", type=click.IntRange(min=1), default=1)
@click.option("-s", type=click.IntRange(min=1), default=1)
@click.option("--coeffs", type=IntegerList(), default=None)
@click.option("--length", type=click.IntRange(min=1), default=None)
@click.option("--complement", "take_complement", is_flag=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def gen_cmd(
    kind: str, order: int, bits, m: int, orientation: str, perm, k: int,
    side: str, ell: int, s: int, coeffs, length: Optional[int],
    take_complement: bool, output: Optional[str],
) -> None:
    """Write a generated graph in the text format."""
    g = _generate(
        kind, order, bits, m, orientation, perm, k, side, ell, s, coeffs,
        length,
    )
    if take_complement:
        g = complement(g)
    text = write_graph(g)
    if output is None:
        click.echo(text, nl=False)
        return
    _write_text(output, text)
    logger.info("Graph written", kind=kind, order=g.n, path=output)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


@click.command("decompose")
@click.option("--graph", "g", type=GraphFile(), required=True)
@click.option("--ell", type=click.IntRange(min=1), default=1)
@click.option(
    "-k", type=click.IntRange(min=1), default=None,
    help="Also build the k-type graph",
)
@click.option(
    "--partition-out", type=click.Path(dir_okay=False), default=None,
    help="Write the l-homogeneous partition as JSON",
)
@click.option(
    "--quotient-out", type=click.Path(dir_okay=False), default=None,
    help="Write the k-type graph in the looped text format",
)
@click.option(
    "--check-partition", "given", type=PartitionFile(), default=None,
    help="Test whether a stored partition is homogeneous for the graph",
)
@click.pass_obj
def decompose_cmd(
    app: AppContext, g: OrderedGraph, ell: int, k: Optional[int],
    partition_out: Optional[str], quotient_out: Optional[str],
    given: Optional[BlockPartition],
) -> None:
    """Homogeneous and irreducible block structure of a graph."""
    if quotient_out is not None and k is None:
        raise InputError("--quotient-out needs -k", token=quotient_out)
    decomposition = irreducible_decomposition(g)
    partition = min_l_homogeneous_partition(g, ell)
    payload = {
        "order": g.n,
        "homogeneous_blocks": [
            list(b) for b in homogeneous_blocks(g).blocks
        ],
        "block_sequence": block_sequence(g).t,
        "irreducible_blocks": [list(b) for b in decomposition.blocks],
        "irreducible_sizes": decomposition.sizes,
        "partition": partition_payload(partition),
    }
    if partition_out is not None:
        _write_text(partition_out, blocks_to_json(partition))
        logger.info("Partition written", ell=ell, path=partition_out)
    if k is not None:
        h, k_blocks = k_type_graph(g, k)
        payload["k_type"] = {
            "k": k,
            "blocks": partition_payload(k_blocks)["blocks"],
            "quotient": write_looped_graph(h),
        }
        if quotient_out is not None:
            _write_text(quotient_out, write_looped_graph(h))
            logger.info("Quotient written", k=k, path=quotient_out)
    if given is not None:
        if given.n != g.n:
            raise InputError(
                "partition does not cover the graph", token=str(given.n),
            )
        payload["check"] = {
            "ell": given.ell,
            "homogeneous": partition_is_homogeneous(g, given),
        }

    rows = [
        {"block": i, "start": start, "stop": stop, "size": size}
        for i, ((start, stop), size) in enumerate(
            zip(decomposition.blocks, decomposition.sizes), start=1,
        )
    ]
    app.echo_report(payload, rows)


def register_graph_handlers(cli: click.Group) -> None:
    cli.add_command(gen_cmd)
    cli.add_command(decompose_cmd)

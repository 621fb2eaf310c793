from collections import defaultdict
from typing import Optional

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition import (BlockPartition,
                                    min_l_homogeneous_partition,
                                    partition_count_bound,
                                    partition_is_homogeneous)
from ordspeed.exceptions import InputError, InternalContradiction
from ordspeed.graphs import OrderedGraph, complement
from ordspeed.structures.detectors import type1_witness
from ordspeed.structures.dto import StructureType
from ordspeed.structures.monotone import longest_monotone
from ordspeed.structures.schemas import Certificate, StructureWitness
from ordspeed.structures.validation import validate_witness

logger: BoundLogger = get_logger()


def certify_partition(
    g: OrderedGraph, k: int, ell: int, shortcut: bool = True,
) -> Certificate:
    """Either a partition into at most 256k^4 ell-homogeneous intervals or
    a size-k structure of Type 1, 2 or 3.

    With ``shortcut`` the greedy partition is tried first and returned
    whenever it is small enough.
    """
    if k < 1 or ell < 1:
        raise InputError("k and ell must be positive", token=f"{k} {ell}")
    bound = partition_count_bound(k)
    if shortcut or g.n <= ell + 1:
        greedy = min_l_homogeneous_partition(g, ell)
        if len(greedy) <= bound or g.n <= ell + 1:
            return Certificate(k=k, ell=ell, partition=greedy)

    complemented = not g.adjacent(1, ell + 1)
    work = complement(g) if complemented else g
    logger.debug(
        "Certifying", order=g.n, k=k, ell=ell, complemented=complemented,
    )
    outcome = _run(work, k, ell)
    if isinstance(outcome, StructureWitness):
        if not validate_witness(work, outcome) or outcome.size < k:
            raise InternalContradiction(
                f"extracted {outcome.variant.value} witness is invalid",
            )
        return Certificate(
            k=k, ell=ell, witness=outcome, complemented=complemented,
        )
    if len(outcome) > bound or not partition_is_homogeneous(g, outcome):
        raise InternalContradiction(
            f"partition of {len(outcome)} blocks breaks the bound {bound}",
        )
    return Certificate(
        k=k, ell=ell, partition=outcome, complemented=complemented,
    )


def _run(g: OrderedGraph, k: int, ell: int):
    n = g.n
    pairs, cuts = _alternating_sequence(g, k, ell)
    if len(pairs) >= 2 * k:
        chosen = pairs[:2 * k]
        return StructureWitness(
            variant=StructureType.TYPE3,
            xs=[j for j, _ in chosen],
            ys=[i for _, i in chosen],
            ell=ell,
        )

    separated: set[int] = set()
    for start, stop in zip(cuts, cuts[1:]):
        u, v = start + 1, stop - 1
        if u > v:
            continue
        block_mask = ((1 << v) - 1) & ~((1 << (u - 1)) - 1)
        chooser: dict[int, list[int]] = defaultdict(list)
        for s in range(u, v):
            diff = (g.rows[s - 1] ^ g.rows[s]) & ~block_mask
            if diff:
                # smallest outside vertex telling s from s + 1
                w = (diff & -diff).bit_length()
                chooser[w].append(s)
        for w in sorted(chooser):
            if len(chooser[w]) > 2 * k:
                vertices = sorted(
                    {t for s in chooser[w] for t in (s, s + 1)},
                )
                witness = type1_witness(g, w, vertices, k)
                if witness is None:
                    raise InternalContradiction(
                        f"vertex {w} does not alternate on its choosers",
                    )
                return witness
        chosen_count = sum(len(ss) for ss in chooser.values())
        if chosen_count >= 64 * k ** 3:
            return _type2_witness(g, chooser, u, k)
        separated.update(s for ss in chooser.values() for s in ss)

    points = sorted(separated | set(cuts[1:-1]))
    return _partition_from_points(n, points, ell)


def _alternating_sequence(g: OrderedGraph, k: int, ell: int):
    """Pairs (j, i_t) of length >= ell alternating edge, non-edge, ...
    each with minimal right end; cuts are 0, i_1, .., n + 1."""
    n = g.n
    pairs = [(1, ell + 1)]
    cuts = [0, ell + 1]
    want_edge = False
    while len(pairs) < 2 * k:
        previous = cuts[-1]
        found: Optional[tuple[int, int]] = None
        for i in range(previous + ell + 1, n + 1):
            # j ranges over previous + 1 .. i - ell
            window = ((1 << (i - ell)) - 1) & ~((1 << previous) - 1)
            row = g.rows[i - 1]
            hits = (row if want_edge else ~row) & window
            if hits:
                found = ((hits & -hits).bit_length(), i)
                break
        if found is None:
            cuts.append(n + 1)
            return pairs, cuts
        pairs.append(found)
        cuts.append(found[1])
        want_edge = not want_edge
    return pairs, cuts


def _type2_witness(
    g: OrderedGraph, chooser: dict[int, list[int]], u: int, k: int,
) -> StructureWitness:
    left = sorted(w for w in chooser if w < u)
    right = sorted(w for w in chooser if w > u)
    outside = left if len(left) >= len(right) else right
    on_left = outside is left
    # each outside vertex keeps its first chooser; choosers are distinct
    firsts = [chooser[w][0] for w in outside]
    increasing, decreasing = longest_monotone(firsts)
    run = increasing if increasing.length >= decreasing.length else decreasing
    if run.length < 4 * k - 1:
        raise InternalContradiction(
            f"monotone run of {run.length} is too short for k={k}",
        )
    picks = [
        (outside[i], firsts[i]) for i in run.indices[::2][:2 * k]
    ]
    if not on_left:
        picks.sort(key=lambda pick: pick[1])

    partners = []
    want: Optional[bool] = None
    for w, s in picks:
        partner = s if want is None or g.adjacent(w, s) == want else s + 1
        partners.append(partner)
        want = not g.adjacent(w, partner)

    if on_left:
        xs = [w for w, _ in picks]
        ys = partners
    else:
        xs = partners
        ys = [w for w, _ in picks]
    variant = (
        StructureType.TYPE2A if all(a < b for a, b in zip(ys, ys[1:]))
        else StructureType.TYPE2B
    )
    return StructureWitness(variant=variant, xs=xs, ys=ys)


def _partition_from_points(
    n: int, points: list[int], ell: int,
) -> BlockPartition:
    blocks = []
    start = 1
    for point in points:
        if start < point:
            blocks.append((start, point - 1))
        blocks.append((point, point))
        start = point + 1
    if start <= n:
        blocks.append((start, n))
    return BlockPartition(ell=ell, blocks=blocks)

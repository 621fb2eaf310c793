from ordspeed.decomposition import block_intervals
from ordspeed.enumeration.dto import PropertyKind
from ordspeed.enumeration.schemas import PropertySpec
from ordspeed.graphs import (OrderedGraph, canonical_key, contains, induced,
                             key_from_rows)


def allowed_keys(spec: PropertySpec) -> frozenset[bytes]:
    return frozenset(canonical_key(g) for g in spec.graphs)


def member(spec: PropertySpec, g: OrderedGraph) -> bool:
    if spec.kind == PropertyKind.FORBIDDEN_SET:
        return not any(contains(h, g) for h in spec.graphs)
    if spec.kind == PropertyKind.BLOCK_PROFILE:
        return blocks_allowed(g, allowed_keys(spec))
    return contains(g, spec.host)


def blocks_allowed(g: OrderedGraph, keys: frozenset[bytes]) -> bool:
    for start, stop in block_intervals(g):
        block = induced(g, range(start, stop + 1))
        if key_from_rows(block.n, block.rows) not in keys:
            return False
    return True

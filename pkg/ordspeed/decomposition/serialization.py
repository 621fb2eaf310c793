import json
from typing import Any

from pydantic import ValidationError

from ordspeed.decomposition.schemas import BlockPartition
from ordspeed.exceptions import InputError


def partition_payload(p: BlockPartition) -> dict[str, Any]:
    return {"ell": p.ell, "blocks": [list(block) for block in p.blocks]}


def blocks_to_json(p: BlockPartition) -> str:
    return json.dumps(partition_payload(p), separators=(",", ":"))


def blocks_from_json(text: str) -> BlockPartition:
    try:
        return BlockPartition.parse_raw(text)
    except ValidationError as e:
        raise InputError("malformed partition", token=text[:40]) from e

from enum import Enum


class PropertyKind(str, Enum):
    FORBIDDEN_SET = "forbidden_set"
    BLOCK_PROFILE = "block_profile"
    SUBGRAPH_CLOSURE = "subgraph_closure"


class CountMethod(str, Enum):
    FRONTIER = "frontier"
    SUBSETS = "subsets"

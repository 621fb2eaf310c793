from typing import Optional

from pydantic import BaseModel


class WitnessSetReport(BaseModel):
    # runs and offending_block number blocks from 1
    min_k: Optional[int]
    runs: list[list[int]] = []
    blocks: list[tuple[int, int]]
    offending_block: Optional[int] = None

    def member_of(self, k: int) -> bool:
        return self.min_k is not None and self.min_k <= k


class P3P4Summary(BaseModel):
    max_order: int
    irreducible: int
    members: int
    # edge lists of graphs where the subgraph test and identification differ
    mismatches: list[list[tuple[int, int]]] = []

    @property
    def holds(self) -> bool:
        return not self.mismatches

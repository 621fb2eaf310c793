from typing import Optional

from pydantic import BaseModel

from ordspeed.graphs import Side
from ordspeed.structures.dto import StructureType


class StructureWitness(BaseModel):
    variant: StructureType
    xs: list[int]
    ys: list[int] = []
    # type 1 only
    y: Optional[int] = None
    side: Optional[Side] = None
    starts_with_edge: Optional[bool] = None
    # type 3 only
    ell: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.xs) // 2

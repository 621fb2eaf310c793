from typing import Optional

from pydantic import BaseModel

from ordspeed.structures.schemas.witness import StructureWitness


class Detection(BaseModel):
    k: int
    witness: Optional[StructureWitness] = None


class MonotoneRun(BaseModel):
    length: int
    # 0-based positions into the input sequence
    indices: list[int]
    values: list[int]

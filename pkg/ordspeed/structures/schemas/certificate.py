from typing import Optional

from pydantic import BaseModel, root_validator

from ordspeed.decomposition import BlockPartition
from ordspeed.structures.schemas.witness import StructureWitness


class Certificate(BaseModel):
    k: int
    ell: int
    partition: Optional[BlockPartition] = None
    witness: Optional[StructureWitness] = None
    complemented: bool = False

    @root_validator(skip_on_failure=True)
    def exactly_one_outcome(cls, values):
        if (values.get("partition") is None) == (
            values.get("witness") is None
        ):
            raise ValueError("certificate needs a partition or a witness")
        return values

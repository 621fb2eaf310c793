from ordspeed.decomposition.schemas.blocks import (BlockPartition,
                                                   BlockSequence,
                                                   IrreducibleDecomposition)
from ordspeed.decomposition.schemas.bound_function import BoundFunction

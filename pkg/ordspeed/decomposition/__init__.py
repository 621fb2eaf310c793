from ordspeed.decomposition.homogeneity import (block_sequence, equivalent,
                                                homogeneous_blocks,
                                                is_l_homogeneous,
                                                min_l_homogeneous_partition,
                                                partition_count_bound,
                                                partition_is_homogeneous)
from ordspeed.decomposition.irreducible import (block_intervals,
                                                irreducible_decomposition,
                                                is_irreducible,
                                                shrink_irreducible)
from ordspeed.decomposition.quotients import (companion_graph,
                                              find_comparable_pair,
                                              k_type_graph, quotient)
from ordspeed.decomposition.schemas import (BlockPartition, BlockSequence,
                                            BoundFunction,
                                            IrreducibleDecomposition)
from ordspeed.decomposition.serialization import (blocks_from_json,
                                                  blocks_to_json,
                                                  partition_payload)

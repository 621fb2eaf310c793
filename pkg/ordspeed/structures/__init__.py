from ordspeed.structures.certificate import certify_partition
from ordspeed.structures.detectors import (alternating_heads, max_type1_k,
                                           max_type2_k, max_type3_k,
                                           type1_witness)
from ordspeed.structures.dto import StructureType
from ordspeed.structures.monotone import longest_monotone
from ordspeed.structures.schemas import (Certificate, Detection, MonotoneRun,
                                         StructureWitness)
from ordspeed.structures.validation import validate_witness

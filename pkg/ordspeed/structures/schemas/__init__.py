from ordspeed.structures.schemas.certificate import Certificate
from ordspeed.structures.schemas.detection import Detection, MonotoneRun
from ordspeed.structures.schemas.witness import StructureWitness

from ordspeed.structures.dto.structure_type import StructureType

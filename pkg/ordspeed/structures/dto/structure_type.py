from enum import Enum


class StructureType(str, Enum):
    TYPE1 = "type1"
    TYPE2A = "type2a"  # y's increasing
    TYPE2B = "type2b"  # y's decreasing
    TYPE3 = "type3"

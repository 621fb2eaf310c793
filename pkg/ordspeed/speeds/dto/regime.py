from enum import Enum


class RegimeCase(str, Enum):
    CONSTANT = "A_constant"
    POLYNOMIAL = "B_polynomial"
    FIBONACCI = "C_fibonacci"
    EXPONENTIAL = "D_exponential"
    INCONCLUSIVE = "inconclusive"

from enum import Enum


class JTag(str, Enum):
    # declaration order is the identification precedence
    J1 = "J1"
    J2 = "J2"
    J3 = "J3"
    J4 = "J4"
    L = "L"
    Q1 = "Q1"
    Q2 = "Q2"

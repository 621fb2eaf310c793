from enum import Enum


class GraphKind(str, Enum):
    K = "K"
    E = "E"
    J1 = "J1"  # complete
    J2 = "J2"  # single edge 1n
    J3 = "J3"  # star at the first vertex
    J4 = "J4"  # star at the last vertex
    L = "L"  # path
    Q1 = "Q1"
    Q2 = "Q2"
    H1 = "H1"
    H2 = "H2"


class Orientation(str, Enum):
    INCREASING = "<"
    DECREASING = ">"


class Side(str, Enum):
    # where the lone vertex sits relative to the alternating run
    LEFT = "left"
    RIGHT = "right"

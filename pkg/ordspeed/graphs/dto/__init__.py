from ordspeed.graphs.dto.graph_kind import GraphKind, Orientation, Side

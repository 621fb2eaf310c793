from ordspeed.exceptions import InputError
from ordspeed.graphs.ordered_graph import LoopedOrderedGraph, OrderedGraph

HEADER = "ordgraph"
LOOP = "loop"


def write_graph(g: OrderedGraph) -> str:
    lines = [f"{HEADER} {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_looped_graph(g: LoopedOrderedGraph) -> str:
    lines = [f"{HEADER} {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    lines.extend(f"{LOOP} {i}" for i in g.loops())
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> OrderedGraph:
    n, edges, loops = _parse(text)
    if loops:
        raise InputError(
            "loops are not allowed here", token=f"{LOOP} {loops[0]}",
        )
    return OrderedGraph.from_edges(n, edges)


def read_looped_graph(text: str) -> LoopedOrderedGraph:
    n, edges, loops = _parse(text)
    return LoopedOrderedGraph.from_edges(n, edges, loops)


def _parse(text: str) -> tuple[int, list[tuple[int, int]], list[int]]:
    n = None
    edges = []
    loops = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != HEADER:
                raise InputError(
                    f"expected '{HEADER} <n>' header", token=line,
                )
            n = _to_int(tokens[1])
            continue
        if tokens[0] == LOOP:
            if len(tokens) != 2:
                raise InputError("malformed loop line", token=line)
            loops.append(_to_int(tokens[1]))
            continue
        if len(tokens) != 2:
            raise InputError("expected '<u> <v>' edge line", token=line)
        u, v = _to_int(tokens[0]), _to_int(tokens[1])
        edges.append((min(u, v), max(u, v)))
    if n is None:
        raise InputError("missing graph header", token="")
    return n, edges, loops


def _to_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError("expected an integer", token=token) from None

from typing import Iterable, Iterator

from ordspeed.exceptions import InputError

MAX_ORDER = 256


class OrderedGraph:
    """Graph on the vertices 1..n taken in their integer order.

    Row ``i - 1`` is a bitmask of the neighbours of vertex ``i``; vertex
    ``j`` lives in bit ``j - 1``. Instances are immutable.
    """

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: tuple[int, ...]) -> None:
        self._n = n
        self._rows = rows

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]],
    ) -> "OrderedGraph":
        if n < 1 or n > MAX_ORDER:
            raise InputError(
                f"order must lie in 1..{MAX_ORDER}", token=str(n),
            )
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(
                    "edge endpoint out of range", token=f"{u} {v}",
                )
            if u == v:
                raise InputError("self-pair is not an edge", token=f"{u} {v}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "OrderedGraph":
        return cls.from_edges(n, ())

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u - 1] >> (v - 1) & 1)

    def neighbor_mask(self, x: int) -> int:
        return self._rows[x - 1]

    def neighbors(self, x: int) -> frozenset[int]:
        return frozenset(_bits(self._rows[x - 1]))

    def max_neighbor(self, x: int) -> int:
        # 0 when x is isolated
        return self._rows[x - 1].bit_length()

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i + 1, j)
            for i, row in enumerate(self._rows)
            for j in _bits(row >> (i + 1) << (i + 1))
        ]

    def edge_count(self) -> int:
        return sum(bin(row).count("1") for row in self._rows) // 2

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self._n}, edges={self.edges()})"

    def __getstate__(self) -> tuple[int, tuple[int, ...]]:
        return self._n, self._rows

    def __setstate__(self, state: tuple[int, tuple[int, ...]]) -> None:
        self._n, self._rows = state


class LoopedOrderedGraph:
    """Ordered graph where a vertex may carry a loop.

    Loops are bit ``i - 1`` of row ``i - 1``; quotients use them to mark
    blocks that induce a non-trivial clique.
    """

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: tuple[int, ...]) -> None:
        self._n = n
        self._rows = rows

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]],
        loops: Iterable[int] = (),
    ) -> "LoopedOrderedGraph":
        base = OrderedGraph.from_edges(n, edges)
        rows = list(base.rows)
        for i in loops:
            if not 1 <= i <= n:
                raise InputError("loop vertex out of range", token=str(i))
            rows[i - 1] |= 1 << (i - 1)
        return cls(n, tuple(rows))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u - 1] >> (v - 1) & 1)

    def has_loop(self, i: int) -> bool:
        return self.adjacent(i, i)

    def loops(self) -> list[int]:
        return [i for i in range(1, self._n + 1) if self.has_loop(i)]

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i + 1, j)
            for i, row in enumerate(self._rows)
            for j in _bits(row >> (i + 1) << (i + 1))
        ]

    def without_loops(self) -> OrderedGraph:
        return OrderedGraph(
            self._n,
            tuple(row & ~(1 << i) for i, row in enumerate(self._rows)),
        )

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopedOrderedGraph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(("looped", self._n, self._rows))

    def __repr__(self) -> str:
        return (
            f"LoopedOrderedGraph(n={self._n}, edges={self.edges()}, "
            f"loops={self.loops()})"
        )

    def __getstate__(self) -> tuple[int, tuple[int, ...]]:
        return self._n, self._rows

    def __setstate__(self, state: tuple[int, tuple[int, ...]]) -> None:
        self._n, self._rows = state


def _bits(mask: int) -> Iterator[int]:
    """1-based positions of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low

from typing import Optional

from pydantic import BaseModel, PositiveInt


class BoundFunction(BaseModel):
    # None stands for an unbounded block
    values: tuple[Optional[PositiveInt], ...]

    @property
    def m(self) -> int:
        return len(self.values)

    def infinite_indices(self) -> list[int]:
        return [i for i, b in enumerate(self.values, start=1) if b is None]

    def multi_indices(self) -> list[int]:
        return [
            i for i, b in enumerate(self.values, start=1)
            if b is None or b > 1
        ]

    def at_most(self, other: "BoundFunction") -> bool:
        return all(
            b is None and c is None
            or b is not None and (c is None or b <= c)
            for b, c in zip(self.values, other.values)
        )

from pydantic import BaseModel, PositiveInt, validator

from ordspeed.graphs import OrderedGraph


class BlockPartition(BaseModel):
    ell: PositiveInt = 1
    blocks: list[tuple[int, int]]

    @validator("blocks")
    def blocks_cover_an_interval(cls, blocks: list[tuple[int, int]]):
        if not blocks:
            raise ValueError("a partition needs at least one block")
        expected = 1
        for start, stop in blocks:
            if start != expected or stop < start:
                raise ValueError(
                    f"block [{start}, {stop}] breaks the consecutive cover"
                )
            expected = stop + 1
        return blocks

    @property
    def n(self) -> int:
        return self.blocks[-1][1]

    def sizes(self) -> list[int]:
        return [stop - start + 1 for start, stop in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)


class BlockSequence(BaseModel):
    t: list[int]

    @validator("t")
    def t_is_nonincreasing(cls, t: list[int]):
        if any(a < b for a, b in zip(t, t[1:])):
            raise ValueError("block sequence must be nonincreasing")
        return t

    def at(self, i: int) -> int:
        """t_i with the conceptual zero padding, 1-based."""
        return self.t[i - 1] if 1 <= i <= len(self.t) else 0


class IrreducibleDecomposition(BaseModel):
    blocks: list[tuple[int, int]]
    graphs: list[OrderedGraph]
    sizes: list[int]

    class Config:
        arbitrary_types_allowed = True

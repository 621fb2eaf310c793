from pydantic import BaseModel, root_validator

from ordspeed.graphs import OrderedGraph


class SpeedSequence(BaseModel):
    counts: list[int]
    exact: list[bool]

    @root_validator(skip_on_failure=True)
    def lengths_agree(cls, values):
        if len(values["counts"]) != len(values["exact"]):
            raise ValueError("counts and exact flags differ in length")
        if any(count < 0 for count in values["counts"]):
            raise ValueError("counts must be nonnegative")
        return values

    @classmethod
    def from_counts(cls, counts: list[int]) -> "SpeedSequence":
        return cls(counts=list(counts), exact=[True] * len(counts))

    @property
    def complete(self) -> bool:
        return all(self.exact)

    def exact_prefix(self) -> list[int]:
        prefix = []
        for count, exact in zip(self.counts, self.exact):
            if not exact:
                break
            prefix.append(count)
        return prefix

    def __len__(self) -> int:
        return len(self.counts)


class MemberList(BaseModel):
    graphs: list[OrderedGraph]
    exact: bool

    class Config:
        arbitrary_types_allowed = True


class SubgraphCount(BaseModel):
    count: int
    exact: bool

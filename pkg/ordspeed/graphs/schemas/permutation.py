from pydantic import BaseModel, validator


class Permutation(BaseModel):
    values: tuple[int, ...]

    @validator("values")
    def values_form_bijection(cls, values: tuple[int, ...]):
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError("values must be a bijection of 1..n")
        return values

    @property
    def n(self) -> int:
        return len(self.values)

    class Config:
        frozen = True

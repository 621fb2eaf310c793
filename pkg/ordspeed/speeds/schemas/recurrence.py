from pydantic import BaseModel, NonNegativeInt, validator


class Recurrence(BaseModel):
    """x^(k+1) = sum a(i) x^i, read as T_n = sum_t a(k-t) T_(n-1-t) with
    T_0 = 1 and T_n = 0 below zero."""

    coeffs: tuple[NonNegativeInt, ...]

    @validator("coeffs")
    def leading_coefficient_positive(cls, value):
        if not value or value[-1] < 1:
            raise ValueError("a(k) must be at least 1")
        return value

    @property
    def k(self) -> int:
        return len(self.coeffs) - 1

    class Config:
        frozen = True

from typing import Optional

from pydantic import BaseModel, root_validator

from ordspeed.speeds.dto import RegimeCase

CASE_PARAMS = {
    RegimeCase.CONSTANT: {"constant"},
    RegimeCase.POLYNOMIAL: {"coefficients", "onset"},
    RegimeCase.FIBONACCI: {"k", "ratio_degree"},
    RegimeCase.EXPONENTIAL: {"window"},
    RegimeCase.INCONCLUSIVE: set(),
}


class PolynomialFit(BaseModel):
    # p(n) = sum a_i C(n, i)
    coefficients: list[int]
    onset: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


class RegimeClassification(BaseModel):
    case: RegimeCase
    constant: Optional[int] = None
    coefficients: Optional[list[int]] = None
    onset: Optional[int] = None
    k: Optional[int] = None
    ratio_degree: Optional[int] = None
    window: Optional[tuple[int, int]] = None
    diagnostics: list[str] = []

    @root_validator(skip_on_failure=True)
    def params_match_case(cls, values):
        wanted = CASE_PARAMS[values["case"]]
        for name in set().union(*CASE_PARAMS.values()):
            if (values.get(name) is not None) != (name in wanted):
                raise ValueError(
                    f"{name} does not fit case {values['case'].value}",
                )
        return values


class GrowthReport(BaseModel):
    # tails, indexed from first_n
    first_n: int
    nth_roots: list[float]
    ratios: list[float]
    fitted_root: Optional[float] = None

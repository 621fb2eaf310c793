from pydantic import BaseModel, PositiveInt


class EnumerationBudget(BaseModel):
    max_nodes: PositiveInt = 10 ** 8
    max_set_keys: PositiveInt = 10 ** 7
    # store whole canonical keys instead of 128-bit digests
    exact_keys: bool = False

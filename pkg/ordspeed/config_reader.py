from enum import Enum
from os import getenv

from pydantic import BaseModel, PositiveInt


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


class Budget(BaseModel):
    max_nodes: PositiveInt
    max_set_keys: PositiveInt
    exact_keys: bool


class Runtime(BaseModel):
    workers: PositiveInt
    output_format: OutputFormat
    log_level: str


class Limits(BaseModel):
    max_order: PositiveInt


class Config(BaseModel):
    budget: Budget
    runtime: Runtime
    limits: Limits


def load_config() -> Config:
    return Config(
        budget=Budget(
            max_nodes=getenv("ORDSPEED_MAX_NODES", "100000000"),
            max_set_keys=getenv("ORDSPEED_MAX_SET_KEYS", "10000000"),
            exact_keys=getenv("ORDSPEED_EXACT_KEYS", "false"),
        ),
        runtime=Runtime(
            workers=getenv("ORDSPEED_WORKERS", "1"),
            output_format=getenv("ORDSPEED_FORMAT", "json"),
            log_level=getenv("ORDSPEED_LOG_LEVEL", "WARNING").upper(),
        ),
        limits=Limits(
            max_order=getenv("ORDSPEED_MAX_ORDER", "256"),
        ),
    )

from hashlib import blake2b

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.enumeration.schemas import EnumerationBudget

logger: BoundLogger = get_logger()


class BudgetExhausted(Exception):
    pass


class BudgetMeter:
    """Node and dedup-key accounting for one enumeration run."""

    def __init__(self, budget: EnumerationBudget) -> None:
        self.budget = budget
        self.nodes = 0
        self.tripped = False

    def spend(self, count: int = 1) -> None:
        self.nodes += count
        if self.nodes > self.budget.max_nodes:
            self._trip("max_nodes")

    def check_keys(self, size: int) -> None:
        if size > self.budget.max_set_keys:
            self._trip("max_set_keys")

    def token(self, key: bytes) -> bytes:
        # digests collide with negligible probability; exact mode avoids it
        if self.budget.exact_keys or len(key) <= 16:
            return key
        return blake2b(key, digest_size=16).digest()

    def _trip(self, limit: str) -> None:
        self.tripped = True
        logger.warning(
            "Enumeration budget exhausted", limit=limit, nodes=self.nodes,
        )
        raise BudgetExhausted(limit)

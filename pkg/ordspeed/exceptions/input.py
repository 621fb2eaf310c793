from typing import Optional

from ordspeed.exceptions.base import OrdspeedError


class InputError(OrdspeedError, ValueError):
    """Malformed argument; `token` names the offending piece of input."""

    def __init__(self, message: str, token: Optional[str] = None) -> None:
        super().__init__(message)
        self.token = token

    def __str__(self) -> str:
        message = super().__str__()
        if self.token is None:
            return message
        return f"{message} (at {self.token!r})"

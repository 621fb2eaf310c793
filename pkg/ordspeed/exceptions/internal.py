from ordspeed.exceptions.base import OrdspeedError


class InternalContradiction(OrdspeedError):
    pass

from ordspeed.exceptions.base import OrdspeedError


class ContractViolation(OrdspeedError):
    pass


class PreconditionError(ContractViolation):
    pass

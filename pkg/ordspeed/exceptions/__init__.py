from ordspeed.exceptions.base import OrdspeedError
from ordspeed.exceptions.contract import ContractViolation, PreconditionError
from ordspeed.exceptions.input import InputError
from ordspeed.exceptions.internal import InternalContradiction

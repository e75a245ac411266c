from .base import HlabError, CapacityError, ContractError, NoAdmissibleStartError
from .syntax_error import HlabSyntaxError
from .format_error import format_error

__all__ = [
    "HlabError",
    "CapacityError",
    "ContractError",
    "NoAdmissibleStartError",
    "HlabSyntaxError",
    "format_error",
]

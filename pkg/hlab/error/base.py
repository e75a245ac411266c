# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, Optional


class HlabError(Exception):
    __slots__ = ("message", "extensions")

    def __init__(self, message, extensions=None):
        # type: (str, Optional[Dict[str, Any]]) -> None
        super(HlabError, self).__init__(message)
        self.message = message
        self.extensions = extensions


class ContractError(HlabError):
    """An operation was called outside of its precondition."""


class CapacityError(HlabError):
    __slots__ = ("what", "value", "cap")

    def __init__(self, what, value, cap):
        # type: (str, int, int) -> None
        super(CapacityError, self).__init__(
            u"{} of {} exceeds the capacity of {}.".format(what, value, cap),
            extensions={"what": what, "value": value, "cap": cap},
        )
        self.what = what
        self.value = value
        self.cap = cap


class NoAdmissibleStartError(HlabError):
    """The empty set is not admissible, so there is nothing to extend."""

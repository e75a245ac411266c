import os

from ..error import ContractError
from ..instances.generators import DEFAULT_SEED, SEED_MASK
from ..limits import lowered_caps

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, List, Mapping, Optional

__all__ = ["FORMATS", "MAX_N_VARIABLE", "RunConfig", "parse_sizes", "parse_int_list"]

FORMATS = ("json", "csv", "text")
MAX_N_VARIABLE = "HLAB_MAX_N"


def parse_sizes(value):
    # type: (str) -> List[int]
    """Parses "A..B" as the inclusive range A to B; a bare number is one size."""
    try:
        if ".." in value:
            low, high = value.split("..", 1)
            sizes = list(range(int(low), int(high) + 1))
        else:
            sizes = [int(value)]
    except ValueError:
        raise ContractError('Sizes must look like "A..B", got "{}".'.format(value))
    if not sizes:
        raise ContractError('Size range "{}" is empty.'.format(value))
    return sizes


def parse_int_list(value):
    # type: (str) -> List[int]
    try:
        return [int(token) for token in value.replace(",", " ").split()]
    except ValueError:
        raise ContractError('Expected integers, got "{}".'.format(value))


def _max_n(environ):
    # type: (Mapping[str, str]) -> Optional[int]
    raw = environ.get(MAX_N_VARIABLE)
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ContractError("{} must be an integer, got {!r}.".format(MAX_N_VARIABLE, raw))
    if value < 0:
        raise ContractError("{} can not be negative.".format(MAX_N_VARIABLE))
    return value


class RunConfig(object):
    """Everything a subcommand run depends on. Caps start at the module
    capacities and can only be lowered."""

    __slots__ = ("subcommand", "inputs", "seed", "caps", "out", "format", "options")

    def __init__(
        self,
        subcommand,  # type: str
        inputs=None,  # type: Optional[List[str]]
        seed=DEFAULT_SEED,  # type: int
        caps=None,  # type: Optional[Dict[str, int]]
        out=None,  # type: Optional[str]
        format="json",  # type: str
        options=None,  # type: Optional[Dict[str, Any]]
    ):
        # type: (...) -> None
        if format not in FORMATS:
            raise ContractError(
                'Unknown format "{}", expected one of {}.'.format(format, ", ".join(FORMATS))
            )
        if not 0 <= seed <= SEED_MASK:
            raise ContractError("Seeds are 64-bit unsigned integers.")
        self.subcommand = subcommand
        self.inputs = inputs or []
        self.seed = seed
        self.caps = caps if caps is not None else lowered_caps(None)
        self.out = out
        self.format = format
        self.options = options or {}

    @classmethod
    def from_args(cls, args, environ=None):
        # type: (Any, Optional[Mapping[str, str]]) -> RunConfig
        environ = os.environ if environ is None else environ
        common = {"subcommand", "input", "seed", "out", "format", "verbose"}
        return cls(
            subcommand=args.subcommand,
            inputs=list(getattr(args, "input", None) or []),
            seed=args.seed,
            caps=lowered_caps(_max_n(environ)),
            out=args.out,
            format=args.format,
            options={k: v for k, v in vars(args).items() if k not in common},
        )

    def input(self, index=0):
        # type: (int) -> Optional[str]
        return self.inputs[index] if index < len(self.inputs) else None

    def __repr__(self):
        # type: () -> str
        return "RunConfig(subcommand={!r}, inputs={!r}, seed={:#x}, format={!r})".format(
            self.subcommand, self.inputs, self.seed, self.format
        )

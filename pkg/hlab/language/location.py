# Necessary for static type checking
if False:  # flake8: noqa
    from .source import Source
    from typing import Any

__all__ = ["get_location", "SourceLocation"]


class SourceLocation(object):
    """1-based line and column of an offset in an instance file."""

    __slots__ = "line", "column"

    def __init__(self, line, column):
        # type: (int, int) -> None
        self.line = line
        self.column = column

    def line_text(self, source):
        # type: (Source) -> str
        for number, (_, text) in enumerate(source.lines(), 1):
            if number == self.line:
                return text
        return u""

    def __str__(self):
        # type: () -> str
        return "{}:{}".format(self.line, self.column)

    def __repr__(self):
        # type: () -> str
        return "SourceLocation(line={}, column={})".format(self.line, self.column)

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, SourceLocation)
            and (self.line, self.column) == (other.line, other.column)
        )


def get_location(source, position):
    # type: (Source, int) -> SourceLocation
    """Offsets past the last line break land on the line after it, so errors
    at end of file point below the last line."""
    line, start = 1, 0
    for number, (offset, _) in enumerate(source.lines(), 1):
        if offset > position:
            break
        line, start = number, offset
    if position > start and source.body[start:position].endswith("\n"):
        line, start = line + 1, position
    return SourceLocation(line, position - start + 1)

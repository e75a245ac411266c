from ..language.location import get_location
from .base import HlabError

# Necessary for static type checking
if False:  # flake8: noqa
    from ..language.source import Source
    from ..language.location import SourceLocation

__all__ = ["HlabSyntaxError"]


class HlabSyntaxError(HlabError):
    __slots__ = ("source", "position", "location")

    def __init__(self, source, position, description):
        # type: (Source, int, str) -> None
        location = get_location(source, position)
        super(HlabSyntaxError, self).__init__(
            message=u"Syntax Error {} ({}) {}\n\n{}".format(
                source.name, location, description, highlight_line(source, location)
            ),
            extensions={"line": location.line, "column": location.column},
        )
        self.source = source
        self.position = position
        self.location = location


def highlight_line(source, location):
    # type: (Source, SourceLocation) -> str
    text = location.line_text(source)
    if not text:
        return u""
    prefix = u"{}: ".format(location.line)
    return u"{}{}\n{}^\n".format(prefix, text, " " * (len(prefix) + location.column - 1))

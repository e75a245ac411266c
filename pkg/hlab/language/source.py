__all__ = ["Source"]


class Source(object):
    """Text of an instance file together with the name used in error messages."""

    __slots__ = "body", "name"

    def __init__(self, body, name="<input>"):
        # type: (str, str) -> None
        self.body = body
        self.name = name

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Source)
            and self.body == other.body
            and self.name == other.name
        )

    def __repr__(self):
        # type: () -> str
        return "Source(name={!r})".format(self.name)

    def lines(self):
        """Yields (position, line) pairs; position is the offset of the line start."""
        position = 0
        for line in self.body.splitlines(True):
            yield position, line.rstrip("\r\n")
            position += len(line)

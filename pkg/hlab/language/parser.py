"""Parsers for the line-oriented instance formats.

  - DIMACS edge format: ``p edge <n> <m>`` then ``e <u> <v>`` (1-based).
  - DIMACS CNF: ``p cnf <vars> <clauses>`` then 0-terminated clauses.
  - Family files: ``ground <n>`` then ``set <i1> <i2> ...`` (0-based), one
    line per maximal set; the loader takes the downward closure.

Lines starting with ``c`` are comments in all three formats.
"""
import re

from six import string_types

from ..core.family import downward_closure
from ..core.ground import GroundSet
from ..error import ContractError, HlabSyntaxError
from ..instances.cnf import CnfFormula
from ..instances.graph import Graph
from .source import Source

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import List, Optional, Set, Tuple, Union
    from ..core.family import SetFamily

__all__ = ["parse_graph", "parse_cnf", "parse_family"]

TOKEN = re.compile(r"\S+")


def _as_source(source):
    # type: (Union[Source, str]) -> Source
    if isinstance(source, string_types):
        return Source(source)
    assert isinstance(source, Source), "Must provide Source. Received: {}".format(
        repr(source)
    )
    return source


def _tokens(source):
    """Yields the non-comment lines as lists of (position, token)."""
    for position, line in source.lines():
        tokens = [(position + m.start(), m.group()) for m in TOKEN.finditer(line)]
        if tokens and tokens[0][1] != "c":
            yield tokens


def _int(source, token, minimum=None):
    # type: (Source, Tuple[int, str], Optional[int]) -> int
    position, text = token
    try:
        value = int(text)
    except ValueError:
        raise HlabSyntaxError(source, position, u'Expected an integer, found "{}".'.format(text))
    if minimum is not None and value < minimum:
        raise HlabSyntaxError(
            source, position, u"Expected an integer >= {}, found {}.".format(minimum, value)
        )
    return value


def _header(source, tokens, keyword):
    # type: (Source, List[Tuple[int, str]], str) -> Tuple[int, int]
    if len(tokens) != 4 or tokens[1][1] != keyword:
        raise HlabSyntaxError(
            source,
            tokens[0][0],
            u'Expected "p {} <count> <count>".'.format(keyword),
        )
    return _int(source, tokens[2], 0), _int(source, tokens[3], 0)


def parse_graph(source):
    # type: (Union[Source, str]) -> Graph
    source = _as_source(source)
    header = None  # type: Optional[Tuple[int, int]]
    edges = []  # type: List[Tuple[int, int]]
    seen = set()  # type: Set[Tuple[int, int]]
    for tokens in _tokens(source):
        kind = tokens[0][1]
        if kind == "p":
            if header is not None:
                raise HlabSyntaxError(source, tokens[0][0], u"Duplicate problem line.")
            header = _header(source, tokens, "edge")
        elif kind == "e":
            if header is None:
                raise HlabSyntaxError(source, tokens[0][0], u"Edge before the problem line.")
            if len(tokens) != 3:
                raise HlabSyntaxError(source, tokens[0][0], u'Expected "e <u> <v>".')
            u, v = _int(source, tokens[1]), _int(source, tokens[2])
            for vertex, token in ((u, tokens[1]), (v, tokens[2])):
                if not 1 <= vertex <= header[0]:
                    raise HlabSyntaxError(
                        source,
                        token[0],
                        u"Vertex {} is out of range 1..{}.".format(vertex, header[0]),
                    )
            if u == v:
                raise HlabSyntaxError(source, tokens[1][0], u"Loop at vertex {}.".format(u))
            key = (min(u, v), max(u, v))
            if key in seen:
                raise HlabSyntaxError(
                    source, tokens[1][0], u"Duplicate edge {} {}.".format(u, v)
                )
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise HlabSyntaxError(
                source, tokens[0][0], u'Unexpected line starting with "{}".'.format(kind)
            )

    end = len(source.body)
    if header is None:
        raise HlabSyntaxError(source, end, u"Missing problem line.")
    if len(edges) != header[1]:
        raise HlabSyntaxError(
            source, end, u"Expected {} edges, found {}.".format(header[1], len(edges))
        )
    return Graph(header[0], edges)


def parse_cnf(source):
    # type: (Union[Source, str]) -> CnfFormula
    source = _as_source(source)
    header = None  # type: Optional[Tuple[int, int]]
    clauses = []  # type: List[List[int]]
    pending = []  # type: List[int]
    pending_position = 0
    for tokens in _tokens(source):
        kind = tokens[0][1]
        if kind == "%":
            break
        if kind == "p":
            if header is not None:
                raise HlabSyntaxError(source, tokens[0][0], u"Duplicate problem line.")
            header = _header(source, tokens, "cnf")
            continue
        if header is None:
            raise HlabSyntaxError(source, tokens[0][0], u"Clause before the problem line.")
        for token in tokens:
            literal = _int(source, token)
            if literal == 0:
                if not pending:
                    raise HlabSyntaxError(source, token[0], u"Empty clause.")
                clauses.append(pending)
                pending = []
                continue
            if abs(literal) > header[0]:
                raise HlabSyntaxError(
                    source,
                    token[0],
                    u"Literal {} is out of range for {} variables.".format(
                        literal, header[0]
                    ),
                )
            if not pending:
                pending_position = token[0]
            pending.append(literal)

    end = len(source.body)
    if header is None:
        raise HlabSyntaxError(source, end, u"Missing problem line.")
    if pending:
        raise HlabSyntaxError(
            source, pending_position, u"Clause is missing its terminating 0."
        )
    if len(clauses) != header[1]:
        raise HlabSyntaxError(
            source, end, u"Expected {} clauses, found {}.".format(header[1], len(clauses))
        )
    return CnfFormula(header[0], clauses)


def parse_family(source):
    # type: (Union[Source, str]) -> SetFamily
    source = _as_source(source)
    ground = None  # type: Optional[GroundSet]
    tops = []  # type: List[int]
    for tokens in _tokens(source):
        kind = tokens[0][1]
        if kind == "ground":
            if ground is not None:
                raise HlabSyntaxError(source, tokens[0][0], u"Duplicate ground line.")
            if len(tokens) != 2:
                raise HlabSyntaxError(source, tokens[0][0], u'Expected "ground <n>".')
            ground = GroundSet(_int(source, tokens[1], 0))
        elif kind == "set":
            if ground is None:
                raise HlabSyntaxError(source, tokens[0][0], u"Set before the ground line.")
            mask = 0
            for token in tokens[1:]:
                index = _int(source, token, 0)
                if index >= ground.size:
                    raise HlabSyntaxError(
                        source,
                        token[0],
                        u"Element {} is out of range 0..{}.".format(index, ground.size - 1),
                    )
                mask |= 1 << index
            tops.append(mask)
        else:
            raise HlabSyntaxError(
                source, tokens[0][0], u'Unexpected line starting with "{}".'.format(kind)
            )
    if ground is None:
        raise HlabSyntaxError(source, len(source.body), u"Missing ground line.")
    try:
        return downward_closure(ground, tops)
    except ContractError as error:
        raise HlabSyntaxError(source, 0, error.message)

"""Report rendering. Every format is deterministic: JSON keys are sorted and
CSV columns follow the sorted union of row keys."""
import csv
import io
import json
import os

import jsonschema
import six

from ..error import ContractError

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable, Dict, List, Optional

__all__ = [
    "Report",
    "SCHEMA_DIR",
    "load_schema",
    "validate_report",
    "render_json",
    "render_csv",
    "render_text",
    "write_output",
]

SCHEMA_DIR = os.path.join(os.path.dirname(__file__), "schemas")

_schemas = {}  # type: Dict[str, Dict[str, Any]]


def load_schema(subcommand):
    # type: (str) -> Dict[str, Any]
    """The published JSON Schema of one subcommand's report."""
    if subcommand not in _schemas:
        path = os.path.join(SCHEMA_DIR, subcommand + ".json")
        if not os.path.exists(path):
            raise ContractError('No report schema for "{}".'.format(subcommand))
        with io.open(path, encoding="utf-8") as handle:
            _schemas[subcommand] = json.load(handle)
    return _schemas[subcommand]


def validate_report(subcommand, data):
    # type: (str, Dict[str, Any]) -> None
    try:
        jsonschema.validate(instance=data, schema=load_schema(subcommand))
    except jsonschema.ValidationError as error:
        path = "/".join(str(key) for key in error.absolute_path) or "report"
        raise ContractError(
            "The {} report does not match its schema at {}: {}".format(
                subcommand, path, error.message
            )
        )


def render_json(data):
    # type: (Any) -> str
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def render_csv(rows):
    # type: (List[Dict[str, Any]]) -> str
    fieldnames = sorted(set(key for row in rows for key in row))
    buffer = io.StringIO() if six.PY3 else io.BytesIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                key: json.dumps(value, sort_keys=True)
                if isinstance(value, (dict, list))
                else value
                for key, value in row.items()
            }
        )
    return buffer.getvalue()


def _text_lines(data, indent):
    # type: (Any, str) -> List[str]
    lines = []
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value:
                lines.append("{}{}:".format(indent, key))
                lines.extend(_text_lines(value, indent + "  "))
            elif isinstance(value, six.string_types) and "\n" in value:
                lines.append("{}{}:".format(indent, key))
                lines.extend(indent + "  " + line for line in value.rstrip("\n").split("\n"))
            else:
                lines.append("{}{}: {}".format(indent, key, _scalar(value)))
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                lines.append("{}-".format(indent))
                lines.extend(_text_lines(item, indent + "  "))
            else:
                lines.append("{}- {}".format(indent, _scalar(item)))
    else:
        lines.append(indent + _scalar(data))
    return lines


def _scalar(value):
    # type: (Any) -> str
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render_text(data):
    # type: (Any) -> str
    return "\n".join(_text_lines(data, "")) + "\n"


class Report(object):
    """Data of one subcommand run. rows feed the CSV format and default to a
    single row of the data; text overrides the generic text rendering."""

    __slots__ = ("data", "rows", "text")

    def __init__(self, data, rows=None, text=None):
        # type: (Dict[str, Any], Optional[List[Dict[str, Any]]], Optional[str]) -> None
        self.data = data
        self.rows = rows
        self.text = text

    def render(self, format):
        # type: (str) -> str
        if format == "csv":
            return render_csv(self.rows if self.rows is not None else [self.data])
        if format == "text":
            return self.text if self.text is not None else render_text(self.data)
        return render_json(self.data)


def write_output(content, out=None, stream=None):
    # type: (str, Optional[str], Any) -> None
    if out is None:
        stream.write(content)
        return
    with io.open(out, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(six.text_type(content))

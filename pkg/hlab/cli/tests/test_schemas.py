import json
import os

import jsonschema
import pytest
from pytest import raises

from hlab.cli.main import SUBCOMMANDS
from hlab.cli.reports import SCHEMA_DIR, load_schema, validate_report
from hlab.error import ContractError

from .test_main import (
    PATH_FAMILY,
    PATH_GRAPH,
    TWO_TRIANGLES,
    U24_FAMILY,
    run,
)

RUNS = [
    ("matroid", ["--input", ("u24.fam", U24_FAMILY)]),
    ("matroid", ["--input", ("p3.fam", PATH_FAMILY)]),
    ("greedy", ["--input", ("p3.fam", PATH_FAMILY), "--weights", "witness"]),
    ("greedy", ["--input", ("u24.fam", U24_FAMILY), "--weights", "4,3,2,1"]),
    ("figure1", []),
    ("mvdccp", ["--input", ("triangles.col", TWO_TRIANGLES)]),
    ("mvdccp", ["--input", ("p3.col", PATH_GRAPH)]),
    ("mvdccp", []),
    ("classify", ["misp", "--sizes", "4..6", "--samples", "1"]),
    ("classify", ["hcp", "--sizes", "3..5", "--samples", "1"]),
    ("classify", ["sat", "--sizes", "3..4", "--samples", "1"]),
    ("sheet", []),
    ("sheet", ["--misp", ("p3.col", PATH_GRAPH)]),
    ("trace", ["misp"]),
    ("trace", ["hcp", "--policy", "random"]),
    ("trace", ["sat"]),
    ("trace", ["family", "--input", ("p3.fam", PATH_FAMILY)]),
]


def test_every_subcommand_publishes_a_schema():
    # type: () -> None
    published = sorted(
        name[: -len(".json")] for name in os.listdir(SCHEMA_DIR) if name.endswith(".json")
    )
    assert published == sorted(SUBCOMMANDS)
    for name in published:
        jsonschema.Draft7Validator.check_schema(load_schema(name))


@pytest.mark.parametrize("subcommand,arguments", RUNS)
def test_reports_match_their_schema(files, subcommand, arguments):
    argv = [subcommand]
    for argument in arguments:
        argv.append(files(*argument) if isinstance(argument, tuple) else argument)
    code, out, err = run(*argv)
    assert code in (0, 1), err
    jsonschema.validate(instance=json.loads(out), schema=load_schema(subcommand))


def test_matroid_records_family_and_greedy_gap(files):
    _, out, _ = run("matroid", "--input", files("p3.fam", PATH_FAMILY))
    data = json.loads(out)
    assert data["family_id"] == "p3.fam"
    assert data["greedy_gap"] == 1

    _, out, _ = run("matroid", "--input", files("u24.fam", U24_FAMILY))
    data = json.loads(out)
    assert data["family_id"] == "u24.fam"
    assert data["greedy_gap"] is None


def test_mismatched_reports_are_refused():
    # type: () -> None
    with raises(ContractError) as excinfo:
        validate_report(
            "greedy",
            {
                "weights": [1],
                "greedy": "{a}",
                "greedy_weight": 1,
                "optimum": "{a}",
                "optimum_weight": 1,
                "gap": -1,
            },
        )
    assert "greedy report does not match its schema at gap" in excinfo.value.message

    with raises(ContractError):
        validate_report("trace", {"kind": "misp"})
    with raises(ContractError):
        load_schema("nonsense")

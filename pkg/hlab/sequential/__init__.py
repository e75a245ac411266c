"""Sequential constructions through instrumented extension predicates and
the cost reports built on them."""
from .trace import QueryRecord, TraceStep, SequentialTrace, theorem2_check, dump_trace
from .build import (
    SelectionPolicy,
    FirstFeasiblePolicy,
    RandomPolicy,
    GivenOrderPolicy,
    POLICIES,
    get_policy,
    sequential_build,
)
from .growth import PROBLEMS, SizeRecord, GrowthReport, make_oracle, classify_growth
from .verdicts import CLAIMS, VerdictRow, VerdictSheet, extension_bound, uf_verdict_sheet

__all__ = [
    "QueryRecord",
    "TraceStep",
    "SequentialTrace",
    "theorem2_check",
    "dump_trace",
    "SelectionPolicy",
    "FirstFeasiblePolicy",
    "RandomPolicy",
    "GivenOrderPolicy",
    "POLICIES",
    "get_policy",
    "sequential_build",
    "PROBLEMS",
    "SizeRecord",
    "GrowthReport",
    "make_oracle",
    "classify_growth",
    "CLAIMS",
    "VerdictRow",
    "VerdictSheet",
    "extension_bound",
    "uf_verdict_sheet",
]

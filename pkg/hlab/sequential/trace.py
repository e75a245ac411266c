"""Records of sequential constructions.

Every predicate evaluation costs one unit plus the elementary work the
oracle reports for it, so cumulative cost grows strictly with each query.
"""
from ..pyutils.bits import iter_bits

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable, Dict, List, Optional

__all__ = ["QueryRecord", "TraceStep", "SequentialTrace", "theorem2_check", "dump_trace"]


class QueryRecord(object):
    """One predicate evaluation. element is None for the admissibility query
    on the empty set."""

    __slots__ = ("element", "accepted", "work", "cumulative_work")

    def __init__(self, element, accepted, work, cumulative_work):
        # type: (Optional[int], bool, int, int) -> None
        self.element = element
        self.accepted = accepted
        self.work = work
        self.cumulative_work = cumulative_work

    @property
    def cost(self):
        # type: () -> int
        return 1 + self.work

    def __repr__(self):
        # type: () -> str
        return "QueryRecord(element={}, accepted={}, work={})".format(
            self.element, self.accepted, self.work
        )


class TraceStep(object):
    __slots__ = ("element", "cumulative_work", "snapshot")

    def __init__(self, element, cumulative_work, snapshot):
        # type: (Optional[int], int, int) -> None
        self.element = element
        self.cumulative_work = cumulative_work
        self.snapshot = snapshot

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, TraceStep)
            and self.element == other.element
            and self.cumulative_work == other.cumulative_work
            and self.snapshot == other.snapshot
        )

    def __repr__(self):
        # type: () -> str
        return "TraceStep(element={}, cumulative_work={}, snapshot={})".format(
            self.element, self.cumulative_work, list(iter_bits(self.snapshot))
        )


class SequentialTrace(object):
    """Accepted steps of a construction, starting from the empty set, plus
    every query made along the way."""

    __slots__ = ("kind", "policy", "ground_size", "steps", "queries", "labeler")

    def __init__(
        self,
        kind,  # type: Optional[str]
        policy,  # type: str
        ground_size,  # type: int
        steps,  # type: List[TraceStep]
        queries,  # type: List[QueryRecord]
        labeler=None,  # type: Optional[Callable[[int], str]]
    ):
        # type: (...) -> None
        self.kind = kind
        self.policy = policy
        self.ground_size = ground_size
        self.steps = steps
        self.queries = queries
        self.labeler = labeler or str

    @property
    def final(self):
        # type: () -> int
        return self.steps[-1].snapshot if self.steps else 0

    @property
    def elements(self):
        # type: () -> List[int]
        return list(iter_bits(self.final))

    @property
    def total_work(self):
        # type: () -> int
        return self.queries[-1].cumulative_work if self.queries else 0

    @property
    def outcome(self):
        # type: () -> str
        """Support when every element outside the final set was rejected
        at some point; rejections persist as the set only grows."""
        rejected = set(q.element for q in self.queries if not q.accepted)
        outside = set(range(self.ground_size)) - set(self.elements)
        return "support" if self.steps and outside <= rejected else "dead end"

    def label(self, element):
        # type: (Optional[int]) -> str
        return "-" if element is None else self.labeler(element)

    def describe(self, mask):
        # type: (int) -> str
        return "{" + ",".join(self.labeler(e) for e in iter_bits(mask)) + "}"

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            "kind": self.kind,
            "policy": self.policy,
            "outcome": self.outcome,
            "final": [self.labeler(e) for e in self.elements],
            "total_work": self.total_work,
            "queries": len(self.queries),
            "steps": [
                {
                    "element": None if step.element is None else self.labeler(step.element),
                    "cumulative_work": step.cumulative_work,
                    "snapshot": [self.labeler(e) for e in iter_bits(step.snapshot)],
                }
                for step in self.steps
            ],
        }


def theorem2_check(trace):
    # type: (SequentialTrace) -> bool
    """True when the cumulative work strictly increases along the steps, so
    every proper prefix was cheaper than the completed construction."""
    previous = 0
    for step in trace.steps:
        if step.cumulative_work <= previous:
            return False
        previous = step.cumulative_work
    return previous <= trace.total_work


def dump_trace(trace):
    # type: (SequentialTrace) -> str
    """One line per query: step, element, verdict, cumulative work."""
    lines = ["c {} {}".format(trace.kind, trace.policy)]
    for index, query in enumerate(trace.queries):
        if query.element is None:
            verdict = "start" if query.accepted else "empty"
        else:
            verdict = "accept" if query.accepted else "reject"
        lines.append(
            "{} {} {} {}".format(
                index, trace.label(query.element), verdict, query.cumulative_work
            )
        )
    lines.append("c outcome {} {}".format(trace.outcome, trace.describe(trace.final)))
    return "\n".join(lines) + "\n"

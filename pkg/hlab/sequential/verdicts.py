"""Side-by-side sheets of observed construction cost and claimed
classification. Claims are printed as hypotheses next to the evidence."""
from .build import sequential_build

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, Iterable, List, Optional
    from ..problems.base import IndependenceOracle

__all__ = ["CLAIMS", "VerdictRow", "VerdictSheet", "extension_bound", "uf_verdict_sheet"]

CLAIMS = {
    "misp": "in UF (claimed)",
    "hcp": "not in UF (claimed)",
    "sat": "unclassified",
    "family": "unclassified",
}  # type: Dict[str, str]


def extension_bound(kind, ground_size):
    # type: (Optional[str], int) -> Optional[int]
    """Structural bound on the probes of a full first-feasible build, where
    one is known."""
    if kind == "misp":
        return ground_size * (ground_size + 1) // 2
    return None


class VerdictRow(object):
    __slots__ = (
        "kind",
        "name",
        "ground_size",
        "support",
        "outcome",
        "queries",
        "probes",
        "total_work",
        "max_extension_work",
        "first_extension_work",
    )

    def __init__(
        self,
        kind,  # type: Optional[str]
        name,  # type: Optional[str]
        ground_size,  # type: int
        support,  # type: List[str]
        outcome,  # type: str
        queries,  # type: int
        probes,  # type: int
        total_work,  # type: int
        max_extension_work,  # type: int
        first_extension_work,  # type: Optional[int]
    ):
        # type: (...) -> None
        self.kind = kind
        self.name = name
        self.ground_size = ground_size
        self.support = support
        self.outcome = outcome
        self.queries = queries
        self.probes = probes
        self.total_work = total_work
        self.max_extension_work = max_extension_work
        self.first_extension_work = first_extension_work

    @property
    def bound(self):
        # type: () -> Optional[int]
        return extension_bound(self.kind, self.ground_size)

    @property
    def within_bound(self):
        # type: () -> Optional[bool]
        bound = self.bound
        return None if bound is None else self.probes <= bound

    @property
    def claimed(self):
        # type: () -> str
        return CLAIMS.get(self.kind or "", "unclassified")

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            "kind": self.kind,
            "name": self.name,
            "ground_size": self.ground_size,
            "observed_support": self.support,
            "observed_outcome": self.outcome,
            "observed_queries": self.queries,
            "observed_probes": self.probes,
            "observed_total_work": self.total_work,
            "observed_max_extension_work": self.max_extension_work,
            "observed_first_extension_work": self.first_extension_work,
            "observed_bound": self.bound,
            "observed_within_bound": self.within_bound,
            "claimed": self.claimed,
        }


class VerdictSheet(object):
    __slots__ = ("rows",)

    def __init__(self, rows):
        # type: (List[VerdictRow]) -> None
        self.rows = rows

    def __len__(self):
        # type: () -> int
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {"rows": [row.to_dict() for row in self.rows]}

    def to_rows(self):
        # type: () -> List[Dict[str, Any]]
        rows = []
        for row in self.rows:
            flat = row.to_dict()
            flat["observed_support"] = " ".join(flat["observed_support"])
            rows.append(flat)
        return rows


def uf_verdict_sheet(oracles):
    # type: (Iterable[IndependenceOracle]) -> VerdictSheet
    """Builds one first-feasible support solution per oracle and records its
    cost next to the claimed classification."""
    rows = []
    for oracle in oracles:
        trace = sequential_build(oracle, "first-feasible")
        extensions = [q for q in trace.queries if q.element is not None]
        rows.append(
            VerdictRow(
                kind=oracle.kind,
                name=oracle.name,
                ground_size=oracle.ground_size,
                support=[oracle.element_label(e) for e in trace.elements],
                outcome=trace.outcome,
                queries=len(trace.queries),
                probes=sum(q.work for q in trace.queries),
                total_work=trace.total_work,
                max_extension_work=max([q.work for q in extensions] or [0]),
                first_extension_work=extensions[0].work if extensions else None,
            )
        )
    return VerdictSheet(rows)

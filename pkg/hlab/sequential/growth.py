"""Extension-cost growth of sequential builds across instance sizes.

Work is measured in oracle counters, never in wall time, so a report is a
pure function of (problem, sizes, seed, samples).
"""
import logging

import numpy as np

from ..error import ContractError
from ..instances.generators import (
    DEFAULT_SEED,
    derive_seed,
    random_cnf,
    random_graph,
    random_hamiltonian_graph,
)
from ..limits import HCP_VERTICES, MISP_VERTICES, SAT_VARIABLES, check_capacity
from ..problems.hcp import HcpOracle
from ..problems.misp import MispOracle
from ..problems.sat import SatOracle
from .build import RandomPolicy, sequential_build
from .executors import SyncExecutor, gather

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
    from ..problems.base import IndependenceOracle

__all__ = ["PROBLEMS", "SizeRecord", "GrowthReport", "make_oracle", "classify_growth"]

logger = logging.getLogger(__name__)

MISP_EDGE_PROBABILITY = 0.3
SAT_CLAUSES_PER_VARIABLE = 4

POLY_BOUNDED = "poly-bounded observed"
BOUND_EXCEEDED = "bound exceeded"
RAW_GROWTH = "raw growth"

# problem -> (stable key for seed derivation, capacity cap, smallest size)
PROBLEMS = {
    "misp": (1, MISP_VERTICES, 1),
    "hcp": (2, HCP_VERTICES, 3),
    "sat": (3, SAT_VARIABLES, 3),
}  # type: Dict[str, Tuple[int, str, int]]


def make_oracle(problem, n, seed):
    # type: (str, int, int) -> IndependenceOracle
    """A seeded instance of the given size wrapped in its oracle."""
    if problem == "misp":
        return MispOracle(random_graph(n, MISP_EDGE_PROBABILITY, seed))
    if problem == "hcp":
        # n // 2 chords, capped by the pairs left free by the planted cycle
        chords = min(n // 2, n * (n - 3) // 2)
        return HcpOracle(random_hamiltonian_graph(n, chords, seed))
    if problem == "sat":
        return SatOracle(
            random_cnf(n, SAT_CLAUSES_PER_VARIABLE * n, seed, planted=True)
        )
    raise ContractError(
        'Unknown problem "{}", expected one of {}.'.format(
            problem, ", ".join(sorted(PROBLEMS))
        )
    )


class SizeRecord(object):
    __slots__ = ("n", "worst", "mean", "queries", "total")

    def __init__(self, n, worst, mean, queries, total):
        # type: (int, int, float, int, int) -> None
        self.n = n
        self.worst = worst
        self.mean = mean
        self.queries = queries
        self.total = total

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            "n": self.n,
            "worst_work": self.worst,
            "mean_work": round(self.mean, 6),
            "queries": self.queries,
            "total_work": self.total,
        }


class GrowthReport(object):
    """Per-size worst and mean extension work with fitted slopes of
    log(work) against log(n) and against n."""

    __slots__ = ("problem", "seed", "samples", "records", "bound_constant")

    def __init__(self, problem, seed, samples, records, bound_constant=1):
        # type: (str, int, int, List[SizeRecord], int) -> None
        self.problem = problem
        self.seed = seed
        self.samples = samples
        self.records = records
        self.bound_constant = bound_constant

    @property
    def sizes(self):
        # type: () -> List[int]
        return [record.n for record in self.records]

    def _slope(self, xs):
        # type: (Sequence[float]) -> Optional[float]
        if len(self.records) < 2:
            return None
        ys = np.log([max(record.worst, 1) for record in self.records])
        return round(float(np.polyfit(xs, ys, 1)[0]), 6)

    @property
    def loglog_slope(self):
        # type: () -> Optional[float]
        return self._slope(np.log(self.sizes))

    @property
    def semilog_slope(self):
        # type: () -> Optional[float]
        return self._slope(np.asarray(self.sizes, dtype=float))

    @property
    def label(self):
        # type: () -> str
        if self.problem != "misp":
            return RAW_GROWTH
        c = self.bound_constant
        if all(record.worst <= c * record.n ** 2 for record in self.records):
            return POLY_BOUNDED
        return BOUND_EXCEEDED

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            "problem": self.problem,
            "seed": self.seed,
            "samples": self.samples,
            "sizes": self.sizes,
            "records": [record.to_dict() for record in self.records],
            "loglog_slope": self.loglog_slope,
            "semilog_slope": self.semilog_slope,
            "label": self.label,
        }

    def to_rows(self):
        # type: () -> List[Dict[str, Any]]
        rows = []
        for record in self.records:
            row = {"problem": self.problem, "label": self.label}
            row.update(record.to_dict())
            rows.append(row)
        return rows


def _measure(problem, n, seed, samples):
    # type: (str, int, int, int) -> SizeRecord
    key = PROBLEMS[problem][0]
    works = []  # type: List[int]
    for sample in range(samples):
        instance_seed = derive_seed(seed, key, n, sample)
        oracle = make_oracle(problem, n, instance_seed)
        trace = sequential_build(oracle, RandomPolicy(derive_seed(instance_seed, 0)))
        works.extend(q.work for q in trace.queries if q.element is not None)
    worst = max(works) if works else 0
    mean = float(np.mean(works)) if works else 0.0
    logger.debug("%s n=%d: %d queries, worst work %d", problem, n, len(works), worst)
    return SizeRecord(n, worst, mean, len(works), sum(works))


def classify_growth(
    problem,  # type: str
    sizes,  # type: Sequence[int]
    seed=DEFAULT_SEED,  # type: int
    samples=3,  # type: int
    executor=None,  # type: Any
    bound_constant=1,  # type: int
    caps=None,  # type: Optional[Dict[str, int]]
):
    # type: (...) -> GrowthReport
    if problem not in PROBLEMS:
        raise ContractError(
            'Unknown problem "{}", expected one of {}.'.format(
                problem, ", ".join(sorted(PROBLEMS))
            )
        )
    sizes = list(sizes)
    if not sizes:
        raise ContractError("At least one size is needed.")
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise ContractError("Sizes must be strictly increasing.")
    if samples < 1:
        raise ContractError("At least one sample per size is needed.")
    _, cap_name, smallest = PROBLEMS[problem]
    if sizes[0] < smallest:
        raise ContractError(
            "{} instances need at least {} elements, got {}.".format(
                problem, smallest, sizes[0]
            )
        )
    check_capacity(cap_name, sizes[-1], (caps or {}).get(cap_name))

    executor = executor or SyncExecutor()
    records = gather(executor, _measure, [(problem, n, seed, samples) for n in sizes])
    return GrowthReport(problem, seed, samples, records, bound_constant)

"""Explicit hereditary systems (R, Q): heredity and exchange checks, greedy
and brute-force optimizers, and the exhaustive family enumeration used to
test that greedy is optimal exactly on matroids."""
from .ground import GroundSet, default_labels
from .family import SetFamily, downward_closure, is_hereditary
from .exchange import ExchangeViolation, has_exchange_property, is_matroid
from .weights import WeightFunction, weight_of
from .greedy import greedy, greedy_trace, brute_force_max, theorem1_witness
from .enumeration import enumerate_hereditary_families

__all__ = [
    "GroundSet",
    "default_labels",
    "SetFamily",
    "downward_closure",
    "is_hereditary",
    "ExchangeViolation",
    "has_exchange_property",
    "is_matroid",
    "WeightFunction",
    "weight_of",
    "greedy",
    "greedy_trace",
    "brute_force_max",
    "theorem1_witness",
    "enumerate_hereditary_families",
]

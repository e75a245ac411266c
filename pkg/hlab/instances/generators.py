"""Seeded instance generators. The same seed always yields the same instance."""
import itertools

import numpy as np

from ..error import ContractError
from .cnf import CnfFormula
from .graph import Graph

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import List, Sequence, Tuple, Union

    Seed = Union[int, Sequence[int]]

__all__ = ["DEFAULT_SEED", "derive_seed", "random_graph", "random_hamiltonian_graph", "random_cnf"]

SEED_MASK = (1 << 64) - 1

DEFAULT_SEED = 0x5EED


def derive_seed(seed, *keys):
    # type: (int, *int) -> int
    """A 64-bit child seed for (seed, keys), stable across runs and platforms."""
    sequence = np.random.SeedSequence([seed & SEED_MASK] + [int(k) for k in keys])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _rng(seed):
    # type: (Seed) -> np.random.Generator
    return np.random.default_rng(seed)


def random_graph(n, p, seed):
    # type: (int, float, Seed) -> Graph
    """G(n, p): every pair joined independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ContractError("Edge probability must lie in [0, 1].")
    rng = _rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, [pair for pair, draw in zip(pairs, draws) if draw < p])


def random_hamiltonian_graph(n, extra_edges, seed):
    # type: (int, int, Seed) -> Graph
    """A planted Hamiltonian cycle on a random vertex order plus extra_edges
    distinct random chords. Edges are numbered in sorted order."""
    if n < 3:
        raise ContractError("A Hamiltonian cycle needs at least 3 vertices.")
    rng = _rng(seed)
    order = [int(v) for v in rng.permutation(n)]
    cycle = set()
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        cycle.add((min(u, v), max(u, v)))
    free = [pair for pair in itertools.combinations(range(n), 2) if pair not in cycle]
    if extra_edges < 0 or extra_edges > len(free):
        raise ContractError(
            "Can not add {} extra edges, only {} pairs are free.".format(
                extra_edges, len(free)
            )
        )
    picked = rng.choice(len(free), size=extra_edges, replace=False) if extra_edges else []
    edges = sorted(cycle | {free[int(i)] for i in picked})
    return Graph(n, edges)


def random_cnf(num_vars, num_clauses, seed, k=3, planted=False):
    # type: (int, int, Seed, int, bool) -> CnfFormula
    """Random k-CNF with k distinct variables per clause.

    When planted, a hidden assignment is drawn first and any clause it falsifies
    gets one literal flipped, so the formula is satisfiable.
    """
    if num_vars < k:
        raise ContractError("Need at least {} variables for {}-CNF.".format(k, k))
    rng = _rng(seed)
    hidden = rng.random(num_vars) < 0.5
    clauses = []  # type: List[Tuple[int, ...]]
    for _ in range(num_clauses):
        variables = rng.choice(num_vars, size=k, replace=False)
        signs = rng.random(k) < 0.5
        clause = [int(v) + 1 if s else -(int(v) + 1) for v, s in zip(variables, signs)]
        if planted and not any((lit > 0) == bool(hidden[abs(lit) - 1]) for lit in clause):
            flip = int(rng.integers(k))
            clause[flip] = -clause[flip]
        clauses.append(tuple(clause))
    return CnfFormula(num_vars, clauses)

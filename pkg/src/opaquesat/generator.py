"""Seeded random CNF instances for tests and the benchmark harness."""

from __future__ import annotations

import random

from .core import CnfFormula
from .errors import InvalidParameters


def random_cnf(n_vars: int, n_clauses: int, width: int = 3, *, seed: int) -> CnfFormula:
    """A reproducible random formula with fixed-width clauses.

    Each clause draws ``width`` distinct variables from ``1..n_vars`` and
    independent random polarities.  Set semantics may collapse duplicate
    clauses, so the result can have fewer than ``n_clauses`` clauses.
    """
    if width < 1 or n_vars < width:
        raise InvalidParameters(f"need n_vars >= width >= 1, got {n_vars} and {width}")
    if n_clauses < 0:
        raise InvalidParameters("n_clauses must be nonnegative")
    rng = random.Random(seed)
    universe = range(1, n_vars + 1)
    clauses = []
    for _ in range(n_clauses):
        chosen = rng.sample(universe, width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(clauses)

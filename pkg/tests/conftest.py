"""Shared fixtures and independent reference implementations.

The reference implementations here deliberately mirror the set-semantics
definitions as literally as possible (rebuild the whole clause set per
step, enumerate assignments as dictionaries).  They are slow and obvious
on purpose: the package code is tested against them, never the other way
round.
"""

from __future__ import annotations

import random

import pytest

from opaquesat import (
    And,
    Atom,
    CnfFormula,
    Iff,
    Not,
    Or,
    assign_and_simplify,
    models,
)

# Five-variable formula whose smallest unit-propagation backdoor has size
# three; also used for the simplification worked case.
DEMO_CLAUSES = [[1, -2, -3, 5], [1, 2, 4, 5], [3, -4], [-1, 2, 3, 5]]

# Conjunction chain that forces x1, x2, x3 and leaves x4, x5 loose.
def _chain_prop():
    return And(
        Atom(1),
        Iff(Atom(1), Not(Atom(2))),
        Iff(Atom(2), Atom(3)),
        Or(Atom(2), Atom(4), Atom(5)),
    )


@pytest.fixture
def demo_cnf() -> CnfFormula:
    return CnfFormula(DEMO_CLAUSES)


@pytest.fixture
def chain_prop():
    return _chain_prop()


def random_formula(rng: random.Random, max_vars: int, max_clauses: int, max_width: int = 3) -> CnfFormula:
    """A quick seeded CNF sampler for randomized sweeps (not hypothesis)."""
    n_vars = rng.randint(1, max_vars)
    n_clauses = rng.randint(0, max_clauses)
    clauses = []
    for _ in range(n_clauses):
        width = rng.randint(1, min(max_width, n_vars))
        chosen = rng.sample(range(1, n_vars + 1), width)
        clauses.append([v if rng.random() < 0.5 else -v for v in chosen])
    return CnfFormula(clauses)


def naive_up(formula: CnfFormula):
    """Reference subsolver by literal iterated simplification.

    Returns (verdict, trace, model) with verdict one of 'satisfiable',
    'unsatisfiable', 'rejects'.
    """
    trace = []
    assigned: dict[int, bool] = {}
    current = formula
    while True:
        if frozenset() in current.clauses:
            return "unsatisfiable", trace, None
        if not current.clauses:
            model = {v: assigned.get(v, False) for v in formula.variables}
            return "satisfiable", trace, model
        units = [next(iter(c)) for c in current.clauses if len(c) == 1]
        if not units:
            return "rejects", trace, None
        lit = min(units, key=lambda l: (abs(l), l < 0))
        var, val = abs(lit), lit > 0
        trace.append((frozenset({lit}), var, val))
        assigned[var] = val
        current = assign_and_simplify(current, {var: val})


def all_models(formula) -> list[dict[int, bool]]:
    return list(models(formula))


def restrict(model: dict[int, bool], keep) -> dict[int, bool]:
    return {v: model[v] for v in model if v in keep}

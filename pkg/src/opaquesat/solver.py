"""Complete satisfiability decision used as ground truth.

``dpll_solve`` is a plain DPLL over the shared propagation engine with a
fixed deterministic branching rule (lowest-id unassigned variable, true
first).  ``brute_force_solve`` decides by exhaustive truth-table
evaluation and is the independent oracle the search solver is tested
against; the two must never be collapsed into one code path.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import CnfFormula
from .engine import PropagationEngine
from .enumeration import DEFAULT_VARIABLE_CAP, first_model, model_count
from .subsolver import SatResult


@dataclass
class SolveStats:
    decisions: int = 0
    propagations: int = 0
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "decisions": self.decisions,
            "propagations": self.propagations,
            "elapsed": self.elapsed,
        }


def dpll_solve(formula: CnfFormula) -> tuple[SatResult, SolveStats]:
    """Decide ``formula`` by DPLL search with unit propagation."""
    start = time.perf_counter()
    stats = SolveStats()
    engine = PropagationEngine(formula)
    engine.seed_initial_units()
    conflict, propagated = engine.propagate_any_order()
    stats.propagations += propagated

    # Stack entries are (variable, trail mark, flipped); flipped means the
    # false branch is already being explored and a conflict must unwind past.
    stack: list[tuple[int, int, bool]] = []
    result: SatResult | None = None
    while result is None:
        if conflict:
            while stack and stack[-1][2]:
                stack.pop()
            if not stack:
                result = SatResult.unsat()
                break
            var, mark, _ = stack.pop()
            engine.undo_to(mark)
            stack.append((var, mark, True))
            stats.decisions += 1
            engine.assign(var, False)
            conflict, propagated = engine.propagate_any_order()
            stats.propagations += propagated
            continue
        if engine.n_satisfied == engine.n_clauses:
            result = SatResult.sat(engine.total_model())
            break
        var = _lowest_unassigned(engine)
        mark = engine.mark()
        stack.append((var, mark, False))
        stats.decisions += 1
        engine.assign(var, True)
        conflict, propagated = engine.propagate_any_order()
        stats.propagations += propagated

    stats.elapsed = time.perf_counter() - start
    return result, stats


def _lowest_unassigned(engine: PropagationEngine) -> int:
    value = engine.value
    for v in engine.variables:
        if v not in value:
            return v
    raise AssertionError("no unassigned variable in an undecided state")


def brute_force_solve(formula, *, cap: int = DEFAULT_VARIABLE_CAP) -> SatResult:
    """Decide by exhaustive enumeration; works on CNF and general formulas."""
    model = first_model(formula, cap=cap)
    if model is None:
        return SatResult.unsat()
    return SatResult.sat(model)


def brute_force_model_count(formula, *, cap: int = DEFAULT_VARIABLE_CAP) -> int:
    """Number of models, exposed alongside the brute-force verdict."""
    return model_count(formula, cap=cap)

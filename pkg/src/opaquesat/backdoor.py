"""Strong backdoors with respect to the unit propagation subsolver.

A nonempty variable set S is a strong backdoor when the subsolver
determines the simplified formula under every one of the 2**|S|
assignments of S.  Branches are always enumerated in the same order:
S sorted ascending, assignments by binary counting with false as 0 and
the last variable changing fastest.  Subset enumeration (for search and
for the bounded-size decision procedure) is by increasing cardinality
and lexicographic within each cardinality.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Mapping

from .core import CnfFormula
from .engine import REJECT, SAT, UNSAT, PropagationEngine
from .errors import EmptyBackdoorSet, NotAStrongBackdoor, VariableNotInFormula
from .subsolver import SatResult

SATISFIABLE = "satisfiable"
UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class BackdoorCertificate:
    """Witness that every branch over the backdoor set is determined."""

    backdoor: frozenset[int]
    branch_outcomes: Mapping[tuple[bool, ...], str]

    @property
    def sorted_variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.backdoor))

    def to_json_dict(self) -> dict:
        svars = self.sorted_variables
        return {
            "backdoor": list(svars),
            "branches": [
                {
                    "assignment": [[v, val] for v, val in zip(svars, values)],
                    "verdict": self.branch_outcomes[values],
                }
                for values in sorted(self.branch_outcomes)
            ],
        }


@dataclass(frozen=True)
class BackdoorFailure:
    """A branch on which the subsolver rejects, refuting the backdoor claim."""

    failing_assignment: Mapping[int, bool]

    def to_json_dict(self) -> dict:
        return {
            "failing_assignment": [
                [v, self.failing_assignment[v]] for v in sorted(self.failing_assignment)
            ]
        }


def _check_subset(formula: CnfFormula, subset) -> list[int]:
    svars = sorted(subset)
    if not svars:
        raise EmptyBackdoorSet("a backdoor set must be nonempty")
    missing = [v for v in svars if v not in formula.variables]
    if missing:
        raise VariableNotInFormula(
            "not in the formula: " + ", ".join(f"x{v}" for v in missing)
        )
    return svars


def verify_strong_backdoor(
    formula: CnfFormula, subset
) -> BackdoorCertificate | BackdoorFailure:
    """Certify ``subset`` as a strong backdoor or return the first rejection."""
    svars = _check_subset(formula, subset)
    engine = PropagationEngine(formula)
    return _verify_on_engine(engine, svars)


def _verify_on_engine(
    engine: PropagationEngine, svars: list[int]
) -> BackdoorCertificate | BackdoorFailure:
    outcomes: dict[tuple[bool, ...], str] = {}
    for values in itertools.product((False, True), repeat=len(svars)):
        mark = engine.mark()
        verdict = engine.run_branch(list(zip(svars, values)))
        engine.undo_to(mark)
        if verdict == REJECT:
            return BackdoorFailure(dict(zip(svars, values)))
        outcomes[values] = SATISFIABLE if verdict == SAT else UNSATISFIABLE
    return BackdoorCertificate(frozenset(svars), outcomes)


def solve_via_backdoor(formula: CnfFormula, subset) -> tuple[SatResult, int]:
    """Decide the formula by delegating every branch over S to the subsolver.

    Stops at the first satisfying branch; visits all 2**|S| branches only
    when the formula is unsatisfiable.  Raises NotAStrongBackdoor as soon
    as any visited branch is rejected.
    """
    svars = _check_subset(formula, subset)
    engine = PropagationEngine(formula)
    calls = 0
    for values in itertools.product((False, True), repeat=len(svars)):
        mark = engine.mark()
        verdict = engine.run_branch(list(zip(svars, values)))
        calls += 1
        if verdict == SAT:
            model = engine.total_model()
            engine.undo_to(mark)
            assert calls <= 2 ** len(svars)
            return SatResult.sat(model), calls
        engine.undo_to(mark)
        if verdict == REJECT:
            raise NotAStrongBackdoor(BackdoorFailure(dict(zip(svars, values))))
    assert calls == 2 ** len(svars)
    return SatResult.unsat(), calls


def find_smallest_strong_backdoor(
    formula: CnfFormula, size_cap: int | None = None
) -> tuple[frozenset[int], BackdoorCertificate] | None:
    """Exhaustive search for a smallest strong backdoor, up to ``size_cap``.

    Subsets are tried by ascending cardinality, lexicographic within each,
    so the first hit has minimal size.  Returns None when the formula has
    no variables or nothing verifies within the cap.
    """
    found, _ = search_smallest_strong_backdoor(formula, size_cap)
    return found


def search_smallest_strong_backdoor(
    formula: CnfFormula,
    size_cap: int | None = None,
    deadline: float | None = None,
) -> tuple[tuple[frozenset[int], BackdoorCertificate] | None, str]:
    """Like ``find_smallest_strong_backdoor`` but reports how the search ended.

    The status is ``found``, ``cap-exhausted``, or ``timeout`` (when a
    ``deadline`` from ``time.perf_counter`` passes between subsets).
    """
    svars = sorted(formula.variables)
    cap = len(svars) if size_cap is None else min(size_cap, len(svars))
    engine = PropagationEngine(formula)
    for size in range(1, cap + 1):
        for subset in itertools.combinations(svars, size):
            if deadline is not None and time.perf_counter() > deadline:
                return None, "timeout"
            outcome = _verify_on_engine(engine, list(subset))
            if isinstance(outcome, BackdoorCertificate):
                return (frozenset(subset), outcome), "found"
    return None, "cap-exhausted"


def solve_via_bounded_backdoors(
    formula: CnfFormula, k: int
) -> tuple[SatResult | None, int]:
    """Try every subset of at most ``k`` variables as a backdoor candidate.

    Runs the subsolver on the formula simplified under each assignment of
    each subset (including the empty subset, which is the formula itself).
    Returns a satisfiable result at the first satisfying branch, an
    unsatisfiable result once some subset has every branch determined
    unsatisfiable, and None (undetermined) otherwise, along with the
    number of subsolver calls made.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    svars = sorted(formula.variables)
    engine = PropagationEngine(formula)
    calls = 0
    for size in range(0, min(k, len(svars)) + 1):
        for subset in itertools.combinations(svars, size):
            all_unsat = True
            for values in itertools.product((False, True), repeat=size):
                mark = engine.mark()
                verdict = engine.run_branch(list(zip(subset, values)))
                calls += 1
                if verdict == SAT:
                    model = engine.total_model()
                    engine.undo_to(mark)
                    return SatResult.sat(model), calls
                engine.undo_to(mark)
                if verdict != UNSAT:
                    all_unsat = False
            if all_unsat:
                return SatResult.unsat(), calls
    return None, calls

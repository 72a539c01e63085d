"""The unit propagation subsolver.

``up_subsolve`` decides a CNF formula using only empty-clause detection
and iterated unit propagation, or rejects it.  Each round proceeds in a
fixed order: if the current formula contains the empty clause it is
unsatisfiable; if it has no clauses left it is satisfiable; otherwise
the least unit clause is propagated, where unit clauses are ordered by
variable id with the positive literal before the negative one; if no
unit clause exists the formula is rejected.  Propagation runs for at
most one round per variable, so the subsolver is polynomial.

On a satisfiable verdict the returned model covers every variable of
the input formula, with false as the default for variables that were
never forced; together with the fixed clause order this makes the whole
procedure deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import CnfFormula
from .engine import REJECT, SAT, PropagationEngine


@dataclass(frozen=True)
class SatResult:
    """A satisfiability verdict, with a witnessing model when satisfiable."""

    satisfiable: bool
    model: Mapping[int, bool] | None = None

    @classmethod
    def sat(cls, model: Mapping[int, bool]) -> "SatResult":
        return cls(True, dict(model))

    @classmethod
    def unsat(cls) -> "SatResult":
        return cls(False, None)

    def to_json_dict(self) -> dict:
        payload: dict = {"verdict": "satisfiable" if self.satisfiable else "unsatisfiable"}
        if self.model is not None:
            payload["model"] = [[v, self.model[v]] for v in sorted(self.model)]
        return payload


@dataclass(frozen=True)
class TraceStep:
    """One propagation step: the unit clause chosen and the value it forces."""

    clause: frozenset[int]
    variable: int
    value: bool

    def to_json_dict(self, index: int) -> dict:
        return {
            "step": index,
            "clause": sorted(self.clause, key=abs),
            "variable": self.variable,
            "value": self.value,
        }


@dataclass(frozen=True)
class SubsolverOutcome:
    """Either a rejection or a determination, plus the propagation trace."""

    rejected: bool
    result: SatResult | None
    trace: tuple[TraceStep, ...]

    @property
    def determined(self) -> bool:
        return not self.rejected

    def to_json_dict(self) -> dict:
        if self.rejected:
            payload: dict = {"outcome": "rejects"}
        else:
            payload = {"outcome": "determines", **self.result.to_json_dict()}
        payload["trace"] = [step.to_json_dict(i) for i, step in enumerate(self.trace)]
        return payload


def up_subsolve(formula: CnfFormula) -> SubsolverOutcome:
    """Run the unit propagation subsolver on ``formula``."""
    engine = PropagationEngine(formula)
    heap = list(engine.initial_units)
    raw_trace: list[tuple[int, int, bool]] = []
    verdict = engine.propagate_least_first(heap, trace=raw_trace)
    trace = tuple(
        TraceStep(frozenset((var if val else -var,)), var, val)
        for _, var, val in raw_trace
    )
    if verdict == REJECT:
        return SubsolverOutcome(True, None, trace)
    if verdict == SAT:
        return SubsolverOutcome(False, SatResult.sat(engine.total_model()), trace)
    return SubsolverOutcome(False, SatResult.unsat(), trace)


def up_decided(formula: CnfFormula) -> bool:
    """True when the subsolver determines the formula rather than rejecting."""
    return not up_subsolve(formula).rejected

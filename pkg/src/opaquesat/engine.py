"""Incremental unit propagation state shared by the subsolver and solvers.

The engine indexes a formula once (occurrence lists plus per-clause
true/false literal counters) and then supports assigning variables,
undoing to a trail mark, and running unit propagation, without ever
rebuilding clause sets.  Branch enumeration over backdoor candidates
assumes a partial assignment, propagates, reads the verdict, and rolls
back, which keeps each branch proportional to the clauses it touches.

Equivalence with the set-semantics formulation: a clause whose literals
are all false has an empty residue, a clause with a true literal is
deleted by simplification, and a clause with no true literal and exactly
one unassigned literal is a unit.  Duplicate residues that set semantics
would merge can only repeat a unit choice, which the stale-entry checks
skip, so verdicts and traces match the naive iterated-simplification
definition (property tested).
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .core import CnfFormula, clause_key, literal_key

SAT = "satisfiable"
UNSAT = "unsatisfiable"
REJECT = "rejects"


class PropagationEngine:
    __slots__ = (
        "clause_lits",
        "sizes",
        "n_true",
        "n_false",
        "occ",
        "n_clauses",
        "n_satisfied",
        "n_falsified",
        "value",
        "trail",
        "pending",
        "initial_units",
        "variables",
    )

    def __init__(self, formula: CnfFormula):
        ordered = sorted(formula.clauses, key=clause_key)
        self.clause_lits: list[tuple[int, ...]] = [
            tuple(sorted(c, key=literal_key)) for c in ordered
        ]
        n = len(ordered)
        self.sizes = [len(c) for c in self.clause_lits]
        self.n_true = [0] * n
        self.n_false = [0] * n
        self.n_clauses = n
        self.n_satisfied = 0
        self.n_falsified = sum(1 for s in self.sizes if s == 0)
        self.occ: dict[int, list[tuple[int, bool, bool]]] = {}
        for ci, lits in enumerate(self.clause_lits):
            seen: dict[int, list[bool]] = {}
            for lit in lits:
                flags = seen.setdefault(abs(lit), [False, False])
                flags[0 if lit > 0 else 1] = True
            for var, (pos, neg) in seen.items():
                self.occ.setdefault(var, []).append((ci, pos, neg))
        self.value: dict[int, bool] = {}
        self.trail: list[int] = []
        self.pending: list[int] = []
        # Heap entries are (variable, negative-polarity flag, clause index):
        # variable id major, positive before negative, clause index as a
        # deterministic tiebreak.  A clause's residue cannot change while it
        # stays unit, so keys computed at push time remain valid.
        self.initial_units = [
            (abs(lits[0]), lits[0] < 0, ci)
            for ci, lits in enumerate(self.clause_lits)
            if len(lits) == 1
        ]
        heapq.heapify(self.initial_units)
        self.variables = sorted(formula.variables)

    # -- assignment bookkeeping ------------------------------------------

    def assign(self, var: int, val: bool) -> None:
        self.value[var] = val
        self.trail.append(var)
        n_true = self.n_true
        n_false = self.n_false
        sizes = self.sizes
        for ci, pos, neg in self.occ.get(var, ()):
            was_true = n_true[ci]
            if pos:
                if val:
                    n_true[ci] += 1
                else:
                    n_false[ci] += 1
            if neg:
                if val:
                    n_false[ci] += 1
                else:
                    n_true[ci] += 1
            if was_true == 0:
                if n_true[ci] > 0:
                    self.n_satisfied += 1
                else:
                    remaining = sizes[ci] - n_false[ci]
                    if remaining == 0:
                        self.n_falsified += 1
                    elif remaining == 1:
                        self.pending.append(ci)

    def _unassign(self, var: int) -> None:
        val = self.value.pop(var)
        n_true = self.n_true
        n_false = self.n_false
        sizes = self.sizes
        for ci, pos, neg in self.occ.get(var, ()):
            was_true = n_true[ci]
            if was_true == 0 and n_false[ci] == sizes[ci]:
                self.n_falsified -= 1
            if pos:
                if val:
                    n_true[ci] -= 1
                else:
                    n_false[ci] -= 1
            if neg:
                if val:
                    n_false[ci] -= 1
                else:
                    n_true[ci] -= 1
            if was_true > 0 and n_true[ci] == 0:
                self.n_satisfied -= 1

    def mark(self) -> int:
        return len(self.trail)

    def undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            self._unassign(trail.pop())
        self.pending.clear()

    # -- residue helpers ---------------------------------------------------

    def residue_literal(self, ci: int) -> int:
        """The single unassigned literal of a currently unit clause."""
        value = self.value
        for lit in self.clause_lits[ci]:
            if abs(lit) not in value:
                return lit
        raise AssertionError("clause is not unit")

    def _is_unit(self, ci: int) -> bool:
        return self.n_true[ci] == 0 and self.sizes[ci] - self.n_false[ci] == 1

    def drain_pending_into(self, heap: list[tuple[int, bool, int]]) -> None:
        pending = self.pending
        while pending:
            ci = pending.pop()
            if self._is_unit(ci):
                lit = self.residue_literal(ci)
                heapq.heappush(heap, (abs(lit), lit < 0, ci))

    # -- unit propagation with the least-unit-first rule -------------------

    def propagate_least_first(
        self, heap: list[tuple[int, bool, int]], trace: list[tuple[int, int, bool]] | None = None
    ) -> str:
        """Iterate: falsified check, all-satisfied check, least unit, else reject.

        ``heap`` must already hold entries for the formula's current units
        (use a copy of ``initial_units`` plus ``drain_pending_into``).
        Returns one of SAT, UNSAT, REJECT; assignments stay on the trail.
        """
        steps = 0
        limit = len(self.variables)
        while True:
            if self.n_falsified:
                return UNSAT
            if self.n_satisfied == self.n_clauses:
                return SAT
            self.drain_pending_into(heap)
            chosen = -1
            while heap:
                var, neg, ci = heapq.heappop(heap)
                if self._is_unit(ci):
                    lit = self.residue_literal(ci)
                    if abs(lit) == var and (lit < 0) == neg:
                        chosen = ci
                        break
            if chosen < 0:
                return REJECT
            lit = -var if neg else var
            if trace is not None:
                trace.append((chosen, var, not neg))
            self.assign(var, not neg)
            steps += 1
            assert steps <= limit, "unit propagation exceeded the variable count"

    def assume(self, assignment: Iterable[tuple[int, bool]]) -> None:
        for var, val in assignment:
            self.assign(var, val)

    def run_branch(self, assumptions: Sequence[tuple[int, bool]]) -> str:
        """Assume, propagate with the least-first rule, and report the verdict.

        The caller is responsible for ``undo_to`` afterwards; assignments
        (assumptions, propagations) are left in place so a satisfying
        branch's model can be read off first.
        """
        self.assume(assumptions)
        heap = list(self.initial_units)
        return self.propagate_least_first(heap)

    def total_model(self) -> dict[int, bool]:
        """Current assignment extended by false for untouched variables."""
        value = self.value
        return {v: value.get(v, False) for v in self.variables}

    # -- order-free propagation used by the search solver ------------------

    def propagate_any_order(self) -> tuple[bool, int]:
        """Drain pending units in discovery order; returns (conflict, count)."""
        pending = self.pending
        count = 0
        while pending:
            if self.n_falsified:
                pending.clear()
                return True, count
            ci = pending.pop()
            if self._is_unit(ci):
                lit = self.residue_literal(ci)
                self.assign(abs(lit), lit > 0)
                count += 1
        return self.n_falsified > 0, count

    def seed_initial_units(self) -> None:
        self.pending.extend(ci for _, _, ci in self.initial_units)

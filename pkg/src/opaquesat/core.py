"""Set-semantics CNF formulas and their basic operations.

A literal is a nonzero integer: ``v`` stands for the variable ``v`` set
to true, ``-v`` for its negation (the DIMACS convention).  A clause is a
frozenset of literals and a formula is a frozenset of clauses, so
duplicate literals and duplicate clauses collapse automatically.  The
empty clause and the empty formula are both representable and meaningful:
a formula is trivially false when it contains the empty clause and
trivially true when it has no clauses at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from . import prop
from .errors import UnknownVariable

Literal = int
Clause = frozenset[int]
Assignment = Mapping[int, bool]


def negate(literal: Literal) -> Literal:
    return -literal


def variable_of(literal: Literal) -> int:
    return abs(literal)


def literal_key(literal: Literal) -> tuple[int, bool]:
    """Sort key ordering literals by variable id, positive before negative."""
    return (abs(literal), literal < 0)


def clause_key(clause: Clause) -> tuple[tuple[int, bool], ...]:
    """Deterministic sort key for clauses (lexicographic on sorted literals)."""
    return tuple(sorted(literal_key(l) for l in clause))


@dataclass(frozen=True)
class CnfFormula:
    """An immutable CNF formula under set semantics."""

    clauses: frozenset[Clause]

    def __init__(self, clauses: Iterable[Iterable[int]] = ()):
        normalized = frozenset(frozenset(int(l) for l in c) for c in clauses)
        for c in normalized:
            for l in c:
                if l == 0:
                    raise ValueError("0 is not a literal")
        object.__setattr__(self, "clauses", normalized)

    @cached_property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for c in self.clauses for l in c)

    def sorted_clauses(self) -> list[Clause]:
        """Clauses in the canonical deterministic order."""
        return sorted(self.clauses, key=clause_key)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    def __contains__(self, clause) -> bool:
        return frozenset(clause) in self.clauses

    def __repr__(self) -> str:
        body = ", ".join(
            "{" + ", ".join(str(l) for l in sorted(c, key=literal_key)) + "}"
            for c in self.sorted_clauses()
        )
        return f"CnfFormula({{{body}}})"


EMPTY_FORMULA = CnfFormula()
EMPTY_CLAUSE: Clause = frozenset()


def variables(formula) -> frozenset[int]:
    """Variables occurring in a CNF or general formula."""
    return formula.variables


def is_trivially_true(formula: CnfFormula) -> bool:
    """True when the formula has no clauses (the empty conjunction)."""
    return not formula.clauses


def is_trivially_false(formula: CnfFormula) -> bool:
    """True when the formula contains the empty clause (the empty disjunction)."""
    return EMPTY_CLAUSE in formula.clauses


def assign_and_simplify(formula: CnfFormula, assignment: Assignment) -> CnfFormula:
    """Bind variables and simplify under set semantics.

    Clauses containing a satisfied literal are removed and falsified
    literals are stripped from the rest, so no assigned variable survives.
    Every bound variable must occur in the formula.
    """
    if not assignment:
        return formula
    extra = set(assignment) - set(formula.variables)
    if extra:
        missing = ", ".join(f"x{v}" for v in sorted(extra))
        raise UnknownVariable(f"not in the formula: {missing}")
    kept: list[Clause] = []
    for clause in formula.clauses:
        satisfied = False
        remaining: list[int] = []
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is None:
                remaining.append(lit)
            elif value == (lit > 0):
                satisfied = True
                break
        if not satisfied:
            kept.append(frozenset(remaining))
    return CnfFormula(kept)


def satisfies(formula: CnfFormula, assignment: Assignment) -> bool:
    """Clause-set satisfaction: every clause has at least one true literal."""
    return all(
        any(assignment.get(abs(l)) == (l > 0) for l in clause)
        for clause in formula.clauses
    )


def fresh_variables(formula, count: int) -> list[int]:
    """The ``count`` smallest variable ids absent from the formula, ascending."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    used = formula.variables
    out: list[int] = []
    candidate = 1
    while len(out) < count:
        if candidate not in used:
            out.append(candidate)
        candidate += 1
    return out


def cnf_to_prop(formula: CnfFormula) -> prop.PropFormula:
    """View a CNF formula as a general formula with the same variables.

    The empty formula becomes the constant true and an empty clause the
    constant false, mirroring the empty conjunction and disjunction
    conventions.
    """
    if not formula.clauses:
        return prop.TRUE
    disjuncts: list[prop.PropFormula] = []
    for clause in formula.sorted_clauses():
        if not clause:
            disjuncts.append(prop.FALSE)
            continue
        lits = [
            prop.Atom(l) if l > 0 else prop.Not(prop.Atom(-l))
            for l in sorted(clause, key=literal_key)
        ]
        disjuncts.append(lits[0] if len(lits) == 1 else prop.Or(*lits))
    return disjuncts[0] if len(disjuncts) == 1 else prop.And(*disjuncts)

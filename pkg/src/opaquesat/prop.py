"""General propositional formulas as immutable syntax trees.

Nodes are constants, atoms over positive integer variables, negation,
n-ary conjunction and disjunction, implication, and biconditional.
Conjunction and disjunction require at least one operand; the empty
conjunction and disjunction are written as the constants ``TRUE`` and
``FALSE`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import UnboundVariable

Assignment = Mapping[int, bool]


class PropFormula:
    """Base class for formula nodes. Instances are immutable and hashable."""

    __slots__ = ()

    @property
    def variables(self) -> frozenset[int]:
        raise NotImplementedError

    def __and__(self, other: "PropFormula") -> "And":
        return And(self, other)

    def __or__(self, other: "PropFormula") -> "Or":
        return Or(self, other)

    def __invert__(self) -> "Not":
        return Not(self)


@dataclass(frozen=True)
class Const(PropFormula):
    value: bool

    @property
    def variables(self) -> frozenset[int]:
        return frozenset()

    def __repr__(self) -> str:
        return "TRUE" if self.value else "FALSE"


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Atom(PropFormula):
    var: int

    def __post_init__(self):
        if not isinstance(self.var, int) or self.var < 1:
            raise ValueError(f"atom variable must be a positive integer, got {self.var!r}")

    @property
    def variables(self) -> frozenset[int]:
        return frozenset((self.var,))

    def __repr__(self) -> str:
        return f"x{self.var}"


@dataclass(frozen=True)
class Not(PropFormula):
    child: PropFormula

    @property
    def variables(self) -> frozenset[int]:
        return self.child.variables

    def __repr__(self) -> str:
        return f"Not({self.child!r})"


class _Nary(PropFormula):
    __slots__ = ()

    def __iter__(self) -> Iterator[PropFormula]:
        return iter(self.children)


@dataclass(frozen=True, init=False)
class And(_Nary):
    children: tuple[PropFormula, ...]

    def __init__(self, *children: PropFormula):
        if not children:
            raise ValueError("conjunction needs at least one operand")
        object.__setattr__(self, "children", tuple(children))

    @property
    def variables(self) -> frozenset[int]:
        return frozenset().union(*(c.variables for c in self.children))

    def __repr__(self) -> str:
        return "And(" + ", ".join(repr(c) for c in self.children) + ")"


@dataclass(frozen=True, init=False)
class Or(_Nary):
    children: tuple[PropFormula, ...]

    def __init__(self, *children: PropFormula):
        if not children:
            raise ValueError("disjunction needs at least one operand")
        object.__setattr__(self, "children", tuple(children))

    @property
    def variables(self) -> frozenset[int]:
        return frozenset().union(*(c.variables for c in self.children))

    def __repr__(self) -> str:
        return "Or(" + ", ".join(repr(c) for c in self.children) + ")"


@dataclass(frozen=True)
class Implies(PropFormula):
    lhs: PropFormula
    rhs: PropFormula

    @property
    def variables(self) -> frozenset[int]:
        return self.lhs.variables | self.rhs.variables

    def __repr__(self) -> str:
        return f"Implies({self.lhs!r}, {self.rhs!r})"


@dataclass(frozen=True)
class Iff(PropFormula):
    lhs: PropFormula
    rhs: PropFormula

    @property
    def variables(self) -> frozenset[int]:
        return self.lhs.variables | self.rhs.variables

    def __repr__(self) -> str:
        return f"Iff({self.lhs!r}, {self.rhs!r})"


def evaluate(phi: PropFormula, assignment: Assignment) -> bool:
    """Evaluate ``phi`` under a total assignment of its variables.

    Raises UnboundVariable if the assignment misses an atom of ``phi``.
    """
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Atom):
        try:
            return assignment[phi.var]
        except KeyError:
            raise UnboundVariable(f"x{phi.var} is not bound") from None
    if isinstance(phi, Not):
        return not evaluate(phi.child, assignment)
    if isinstance(phi, And):
        return all(evaluate(c, assignment) for c in phi.children)
    if isinstance(phi, Or):
        return any(evaluate(c, assignment) for c in phi.children)
    if isinstance(phi, Implies):
        return (not evaluate(phi.lhs, assignment)) or evaluate(phi.rhs, assignment)
    if isinstance(phi, Iff):
        return evaluate(phi.lhs, assignment) == evaluate(phi.rhs, assignment)
    raise TypeError(f"not a formula node: {phi!r}")


def substitute(phi: PropFormula, assignment: Assignment) -> PropFormula:
    """Replace bound atoms by constants and constant-fold bottom up.

    Bindings for variables that do not occur in ``phi`` are ignored.  Folding
    is limited to the rules forced by a constant operand (for conjunction:
    drop true operands, collapse on a false one; dually for disjunction;
    the analogous forced cases for negation, implication and biconditional).
    No other equivalences are applied, so the result is deterministic and
    contains no bound atom.
    """
    if isinstance(phi, Const):
        return phi
    if isinstance(phi, Atom):
        if phi.var in assignment:
            return TRUE if assignment[phi.var] else FALSE
        return phi
    if isinstance(phi, Not):
        child = substitute(phi.child, assignment)
        if isinstance(child, Const):
            return FALSE if child.value else TRUE
        return Not(child)
    if isinstance(phi, (And, Or)):
        absorbing = isinstance(phi, Or)  # a true operand absorbs a disjunction
        kept: list[PropFormula] = []
        for c in phi.children:
            folded = substitute(c, assignment)
            if isinstance(folded, Const):
                if folded.value == absorbing:
                    return TRUE if absorbing else FALSE
                continue  # neutral operand, drop it
            kept.append(folded)
        if not kept:
            return FALSE if absorbing else TRUE
        if len(kept) == 1:
            return kept[0]
        return Or(*kept) if absorbing else And(*kept)
    if isinstance(phi, Implies):
        lhs = substitute(phi.lhs, assignment)
        rhs = substitute(phi.rhs, assignment)
        if isinstance(lhs, Const):
            return rhs if lhs.value else TRUE
        if isinstance(rhs, Const):
            return TRUE if rhs.value else _negated(lhs)
        return Implies(lhs, rhs)
    if isinstance(phi, Iff):
        lhs = substitute(phi.lhs, assignment)
        rhs = substitute(phi.rhs, assignment)
        if isinstance(lhs, Const):
            return rhs if lhs.value else _negated(rhs)
        if isinstance(rhs, Const):
            return lhs if rhs.value else _negated(lhs)
        return Iff(lhs, rhs)
    raise TypeError(f"not a formula node: {phi!r}")


def _negated(folded: PropFormula) -> PropFormula:
    """Negate an already folded subformula without reintroducing constants."""
    if isinstance(folded, Const):
        return FALSE if folded.value else TRUE
    return Not(folded)

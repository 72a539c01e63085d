"""Backbone detection and extraction.

A variable set S is a backbone when exactly one assignment of S leaves
the formula satisfiable; the empty set is the trivial backbone of every
satisfiable formula, and unsatisfiable formulas have none.  The maximal
backbone is the set of variables that take the same value in every
model, and every backbone is one of its subsets (the tests exercise this
characterization rather than assuming it).

CNF formulas are analyzed with two solver calls per variable and need no
size cap.  General formulas go through exhaustive enumeration, with one
twist: the top-level conjunction is first split into variable-disjoint
components, each enumerated on its own, so the per-component variable
cap is what limits the input rather than the total variable count.
Conjuncts without variables are evaluated outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import prop
from .core import CnfFormula, assign_and_simplify
from .enumeration import (
    DEFAULT_VARIABLE_CAP,
    assignment_from_index,
    truth_mask,
    variable_mask,
)
from .errors import InvalidBeta, TooManyVariables, VariableNotInFormula
from .solver import brute_force_solve, dpll_solve


@dataclass(frozen=True)
class BackboneReport:
    """Satisfiability plus the forced value of every backbone variable."""

    satisfiable: bool
    fixed: Mapping[int, bool]

    def to_json_dict(self) -> dict:
        return {
            "satisfiable": self.satisfiable,
            "fixed": [[v, self.fixed[v]] for v in sorted(self.fixed)],
        }


def is_backbone(formula, subset, *, cap: int = DEFAULT_VARIABLE_CAP) -> bool:
    """True when exactly one assignment of ``subset`` leaves a satisfiable rest.

    For the empty set this degenerates to satisfiability of the formula
    itself (the single empty assignment).
    """
    svars = sorted(subset)
    missing = [v for v in svars if v not in formula.variables]
    if missing:
        raise VariableNotInFormula(
            "not in the formula: " + ", ".join(f"x{v}" for v in missing)
        )
    satisfiable_branches = 0
    for index in range(2 ** len(svars)):
        assignment = assignment_from_index(svars, index)
        if _satisfiable_under(formula, assignment, cap):
            satisfiable_branches += 1
            if satisfiable_branches > 1:
                return False
    return satisfiable_branches == 1


def _satisfiable_under(
    formula, assignment: Mapping[int, bool], cap: int = DEFAULT_VARIABLE_CAP
) -> bool:
    if isinstance(formula, CnfFormula):
        residual = assign_and_simplify(formula, assignment)
        result, _ = dpll_solve(residual)
        return result.satisfiable
    residual = prop.substitute(formula, assignment)
    return _prop_satisfiable(residual, cap)


def backbone_fixed_variables(
    formula, *, cap: int = DEFAULT_VARIABLE_CAP
) -> BackboneReport:
    """The maximal backbone: variables forced to one value across all models."""
    if isinstance(formula, CnfFormula):
        return _cnf_report(formula)
    return _prop_report(formula, cap)


def has_nontrivial_backbone(formula, *, cap: int = DEFAULT_VARIABLE_CAP) -> bool:
    report = backbone_fixed_variables(formula, cap=cap)
    return report.satisfiable and bool(report.fixed)


def has_large_backbone(formula, beta, *, cap: int = DEFAULT_VARIABLE_CAP) -> bool:
    """True when some backbone reaches ``beta`` times the variable count.

    The comparison is exact rational arithmetic: the maximal backbone
    witnesses every smaller backbone, so the test is
    ``|fixed| >= beta * |V|``.
    """
    beta = check_beta(beta)
    report = backbone_fixed_variables(formula, cap=cap)
    if not report.satisfiable:
        return False
    return Fraction(len(report.fixed)) >= beta * len(formula.variables)


def check_beta(beta) -> Fraction:
    try:
        value = Fraction(beta)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidBeta(f"not a rational: {beta!r}") from exc
    if not (0 < value < 1):
        raise InvalidBeta(f"beta must satisfy 0 < beta < 1, got {value}")
    return value


# -- CNF path: two solver calls per variable, no cap -----------------------


def _cnf_report(formula: CnfFormula) -> BackboneReport:
    variables = sorted(formula.variables)
    if not variables:
        # Without variables the formula is the empty conjunction or
        # contains the empty clause; no backbone either way.
        satisfiable = frozenset() not in formula.clauses
        return BackboneReport(satisfiable, {})
    fixed: dict[int, bool] = {}
    satisfiable = False
    for v in variables:
        sat_true = _satisfiable_under(formula, {v: True})
        sat_false = _satisfiable_under(formula, {v: False})
        if not (sat_true or sat_false):
            return BackboneReport(False, {})
        satisfiable = True
        if sat_true != sat_false:
            fixed[v] = sat_true
    return BackboneReport(satisfiable, fixed)


# -- general formula path: per-component exhaustive enumeration ------------


def _prop_report(formula: prop.PropFormula, cap: int) -> BackboneReport:
    fixed: dict[int, bool] = {}
    for component in _conjunctive_components(formula):
        if isinstance(component, bool):
            if not component:
                return BackboneReport(False, {})
            continue
        vs = sorted(component.variables)
        if len(vs) > cap:
            raise TooManyVariables(
                f"component with {len(vs)} variables exceeds the cap of {cap}"
            )
        mask = truth_mask(component, vs)
        if mask == 0:
            return BackboneReport(False, {})
        n = len(vs)
        for j, v in enumerate(vs):
            vmask = variable_mask(n, j)
            if mask & ~vmask == 0:
                fixed[v] = True
            elif mask & vmask == 0:
                fixed[v] = False
    return BackboneReport(True, fixed)


def _prop_satisfiable(formula: prop.PropFormula, cap: int = DEFAULT_VARIABLE_CAP) -> bool:
    for component in _conjunctive_components(formula):
        if isinstance(component, bool):
            if not component:
                return False
            continue
        if len(component.variables) <= cap:
            if not brute_force_solve(component, cap=cap).satisfiable:
                return False
        else:
            raise TooManyVariables(
                f"component with {len(component.variables)} variables exceeds the cap"
            )
    return True


def _conjunctive_components(formula: prop.PropFormula):
    """Split a top-level conjunction into variable-disjoint parts.

    Yields booleans for variable-free conjuncts (their truth value) and
    PropFormula groups otherwise.  Conjuncts sharing variables are glued
    back together with And, so each yielded group is semantically a
    factor of the original formula.
    """
    conjuncts: list[prop.PropFormula] = []
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, prop.And):
            stack.extend(reversed(node.children))
        else:
            conjuncts.append(node)

    groups: list[tuple[set[int], list[prop.PropFormula]]] = []
    for conjunct in conjuncts:
        vs = set(conjunct.variables)
        if not vs:
            yield prop.evaluate(conjunct, {})
            continue
        merged_vars = set(vs)
        merged_members = [conjunct]
        remaining: list[tuple[set[int], list[prop.PropFormula]]] = []
        for gvars, members in groups:
            if gvars & merged_vars:
                merged_vars |= gvars
                merged_members = members + merged_members
            else:
                remaining.append((gvars, members))
        remaining.append((merged_vars, merged_members))
        groups = remaining

    for _, members in groups:
        yield members[0] if len(members) == 1 else prop.And(*members)

"""Exhaustive model enumeration, the ground-truth oracle for everything else.

Assignments are enumerated in binary counting order over the variables
sorted ascending, with false before true and the last variable changing
fastest.  ``models`` walks that order one assignment at a time; the
integer truth-table helpers evaluate all ``2**n`` assignments at once as
a bitmask (bit ``i`` set when assignment number ``i`` satisfies the
formula), which the solvers use as a fast exact oracle.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from . import prop
from .core import CnfFormula, satisfies
from .errors import TooManyVariables

DEFAULT_VARIABLE_CAP = 25


def _sorted_vars(formula, cap: int) -> list[int]:
    vs = sorted(formula.variables)
    if len(vs) > cap:
        raise TooManyVariables(
            f"{len(vs)} variables exceeds the enumeration cap of {cap}"
        )
    return vs


def models(formula, *, cap: int = DEFAULT_VARIABLE_CAP) -> Iterator[dict[int, bool]]:
    """All satisfying total assignments over the formula's variables.

    Accepts a CnfFormula or a PropFormula.  Each call returns a fresh
    iterator, so the enumeration is restartable.
    """
    vs = _sorted_vars(formula, cap)
    if isinstance(formula, CnfFormula):
        accepts = lambda m: satisfies(formula, m)  # noqa: E731
    else:
        accepts = lambda m: prop.evaluate(formula, m)  # noqa: E731
    return _enumerate(vs, accepts)


def _enumerate(vs, accepts) -> Iterator[dict[int, bool]]:
    for values in itertools.product((False, True), repeat=len(vs)):
        assignment = dict(zip(vs, values))
        if accepts(assignment):
            yield assignment


def model_count(formula, *, cap: int = DEFAULT_VARIABLE_CAP) -> int:
    """Number of satisfying total assignments, via the truth-table mask."""
    vs = _sorted_vars(formula, cap)
    return truth_mask(formula, vs).bit_count()


def first_model(formula, *, cap: int = DEFAULT_VARIABLE_CAP) -> dict[int, bool] | None:
    """The first satisfying assignment in enumeration order, if any."""
    vs = _sorted_vars(formula, cap)
    mask = truth_mask(formula, vs)
    if mask == 0:
        return None
    index = (mask & -mask).bit_length() - 1
    return assignment_from_index(vs, index)


def assignment_from_index(vs: list[int], index: int) -> dict[int, bool]:
    """Decode assignment number ``index`` (first variable most significant)."""
    n = len(vs)
    return {v: bool((index >> (n - 1 - j)) & 1) for j, v in enumerate(vs)}


def variable_mask(n: int, position: int) -> int:
    """Bitmask of the assignment indices where variable ``position`` is true.

    ``position`` is 0-based within the ascending variable order, so the
    bit weight is ``2**(n - 1 - position)`` and the mask is the usual
    alternating block pattern of that width over all ``2**n`` indices.
    """
    width = 1 << (n - 1 - position)
    block = ((1 << width) - 1) << width  # one true-block per period
    period = 1 << (2 * width)
    repetitions = (1 << n) // (2 * width)
    return block * ((period**repetitions - 1) // (period - 1))


def truth_mask(formula, vs: list[int]) -> int:
    """Truth table of ``formula`` over ``vs`` as an integer bitmask."""
    position = {v: j for j, v in enumerate(vs)}
    n = len(vs)
    ones = (1 << (1 << n)) - 1
    var_masks = {v: variable_mask(n, j) for v, j in position.items()}
    if isinstance(formula, CnfFormula):
        mask = ones
        for clause in formula.sorted_clauses():
            cmask = 0
            for lit in clause:
                m = var_masks[abs(lit)]
                cmask |= m if lit > 0 else (m ^ ones)
            mask &= cmask
            if mask == 0:
                break
        return mask
    return _prop_mask(formula, var_masks, ones)


def _prop_mask(phi, var_masks, ones: int) -> int:
    if isinstance(phi, prop.Const):
        return ones if phi.value else 0
    if isinstance(phi, prop.Atom):
        return var_masks[phi.var]
    if isinstance(phi, prop.Not):
        return _prop_mask(phi.child, var_masks, ones) ^ ones
    if isinstance(phi, prop.And):
        mask = ones
        for c in phi.children:
            mask &= _prop_mask(c, var_masks, ones)
            if mask == 0:
                break
        return mask
    if isinstance(phi, prop.Or):
        mask = 0
        for c in phi.children:
            mask |= _prop_mask(c, var_masks, ones)
            if mask == ones:
                break
        return mask
    if isinstance(phi, prop.Implies):
        lhs = _prop_mask(phi.lhs, var_masks, ones)
        return (lhs ^ ones) | _prop_mask(phi.rhs, var_masks, ones)
    if isinstance(phi, prop.Iff):
        lhs = _prop_mask(phi.lhs, var_masks, ones)
        rhs = _prop_mask(phi.rhs, var_masks, ones)
        return (lhs ^ rhs) ^ ones
    raise TypeError(f"not a formula node: {phi!r}")

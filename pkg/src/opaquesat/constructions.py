"""Padded formula families: easy structure on top of an arbitrary base.

Two constructions share one shape, a base formula conjoined with a tail
of fresh positive unit conjuncts (fresh variables are always the
smallest ids absent from the base, in ascending order):

* the backdoor family pads a CNF base with enough unit clauses that the
  padded variable count is an exact k-th power of the base's, making the
  base variables an easily extractable strong backdoor of root size;
* the backbone family pads any formula having at least one variable with
  enough fresh conjuncts that, whenever the base is satisfiable, the
  tail alone is a backbone of the requested fraction of all variables.

Both recognizers run in polynomial time by plain parsing plus counting;
they never enumerate assignments or subsets, and they never trust the
metadata comments the generators write into files.  When several
base/tail splits would witness membership, the one with the maximal
tail is returned.
"""

from __future__ import annotations

import math
import subprocess
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import prop
from .backbone import check_beta
from .core import CnfFormula, fresh_variables
from .dimacs import emit_dimacs, parse_dimacs
from .errors import InvalidParameters, ReductionHookFailure, ZeroVariableFormula
from .proptext import emit_formula, parse_formula


def tail_length(base, beta) -> int:
    """Tail size making the tail a ``beta`` fraction of the padded variables.

    Exact ceiling of ``beta * n / (1 - beta)`` over the rationals, where
    ``n`` is the base's variable count; never goes through floats.
    """
    beta = check_beta(beta)
    n = len(base.variables)
    if n == 0:
        raise ZeroVariableFormula("the base formula needs at least one variable")
    return math.ceil(beta * n / (1 - beta))


@dataclass(frozen=True)
class BackdoorFamilyInstance:
    """A CNF base plus its unit-clause tail, padded to a k-th power size."""

    padded: CnfFormula
    base: CnfFormula
    tail_vars: tuple[int, ...]
    k: int

    def __post_init__(self):
        n = len(self.base.variables)
        if n < 1:
            raise ZeroVariableFormula("the base formula needs at least one variable")
        expected_tail = n**self.k - n
        if len(self.tail_vars) != expected_tail:
            raise ValueError(
                f"tail has {len(self.tail_vars)} variables, expected {expected_tail}"
            )
        if list(self.tail_vars) != fresh_variables(self.base, expected_tail):
            raise ValueError("tail variables are not the first fresh variables of the base")
        rebuilt = CnfFormula(
            set(self.base.clauses) | {frozenset((v,)) for v in self.tail_vars}
        )
        if rebuilt != self.padded:
            raise ValueError("padded formula is not base plus tail units")
        if len(self.padded.variables) != n**self.k:
            raise ValueError("padded variable count is not the k-th power of the base's")

    def to_json_dict(self) -> dict:
        return {
            "family": "backdoor",
            "k": self.k,
            "base_variables": sorted(self.base.variables),
            "tail_variables": list(self.tail_vars),
            "total_variables": len(self.padded.variables),
        }


@dataclass(frozen=True)
class BackboneFamilyInstance:
    """A general base plus its fresh positive conjunct tail."""

    padded: prop.PropFormula
    base: prop.PropFormula
    tail_vars: tuple[int, ...]
    beta: Fraction

    def __post_init__(self):
        beta = check_beta(self.beta)
        object.__setattr__(self, "beta", beta)
        n = len(self.base.variables)
        if n < 1:
            raise ZeroVariableFormula("the base formula needs at least one variable")
        expected = math.ceil(beta * n / (1 - beta))
        if len(self.tail_vars) != expected:
            raise ValueError(f"tail has {len(self.tail_vars)} conjuncts, expected {expected}")
        if len(self.tail_vars) < 1:
            raise ValueError("the tail is never empty for 0 < beta < 1")
        if list(self.tail_vars) != fresh_variables(self.base, expected):
            raise ValueError("tail variables are not the first fresh variables of the base")
        rebuilt = prop.And(self.base, *(prop.Atom(v) for v in self.tail_vars))
        if rebuilt != self.padded:
            raise ValueError("padded formula is not the base conjoined with the tail atoms")

    def to_json_dict(self) -> dict:
        return {
            "family": "backbone",
            "beta": f"{self.beta.numerator}/{self.beta.denominator}",
            "base_variables": sorted(self.base.variables),
            "tail_variables": list(self.tail_vars),
            "total_variables": len(self.padded.variables),
        }


# -- backdoor family --------------------------------------------------------


def pad_backdoor_family(base: CnfFormula, k: int) -> BackdoorFamilyInstance:
    """Conjoin fresh unit clauses until the variable count is ``|V|**k``.

    ``k = 1`` is the degenerate case with an empty tail and the padded
    formula equal to the base.
    """
    if k < 1:
        raise InvalidParameters("k must be at least 1")
    n = len(base.variables)
    if n < 1:
        raise ZeroVariableFormula("the base formula needs at least one variable")
    tail = fresh_variables(base, n**k - n)
    padded = CnfFormula(set(base.clauses) | {frozenset((v,)) for v in tail})
    return BackdoorFamilyInstance(padded, base, tuple(tail), k)


def recognize_backdoor_family(
    formula: CnfFormula, k: int
) -> BackdoorFamilyInstance | None:
    """Decide family membership for this ``k`` and extract a decomposition.

    Membership needs a partition of the clauses into a base and positive
    unit clauses over exactly the first ``|V(base)|**k - |V(base)|`` fresh
    variables of the base.  Only parsing and counting are involved: the
    variable total must be an exact k-th power, tail candidates are the
    positive units whose variable occurs nowhere else, and a candidate is
    usable only if it is below the first absent variable id (otherwise it
    could not be among the first fresh variables of any base).
    """
    if k < 1:
        raise InvalidParameters("k must be at least 1")
    if k == 1:
        return None  # only the nontrivial construction is recognized
    total_vars = formula.variables
    n_total = len(total_vars)
    n_base = _integer_root(n_total, k)
    if n_base is None or n_base < 1:
        return None
    tail_size = n_total - n_base

    memberships: dict[int, int] = {}
    for clause in formula.clauses:
        for var in {abs(l) for l in clause}:
            memberships[var] = memberships.get(var, 0) + 1
    first_absent = 1
    while first_absent in total_vars:
        first_absent += 1
    eligible = sorted(
        v
        for v in total_vars
        if v < first_absent
        and memberships[v] == 1
        and frozenset((v,)) in formula.clauses
    )
    if len(eligible) < tail_size:
        return None
    tail = tuple(eligible[len(eligible) - tail_size :])
    tail_clauses = {frozenset((v,)) for v in tail}
    base = CnfFormula(formula.clauses - tail_clauses)
    return BackdoorFamilyInstance(formula, base, tail, k)


def _integer_root(value: int, k: int) -> int | None:
    if value < 1:
        return None
    guess = round(value ** (1.0 / k))
    for candidate in (guess - 1, guess, guess + 1):
        if candidate >= 1 and candidate**k == value:
            return candidate
    return None


def extract_backdoor(instance: BackdoorFamilyInstance) -> frozenset[int]:
    """The base's variables, a strong backdoor of exact root size.

    After assigning all base variables, every base clause is satisfied or
    reduced to the empty clause and only tail units remain, which unit
    propagation finishes off; so the subsolver determines every branch.
    """
    return frozenset(instance.base.variables)


# -- backbone family ---------------------------------------------------------


def pad_backbone_family(base: prop.PropFormula, beta) -> BackboneFamilyInstance:
    """Conjoin fresh positive atoms so the tail is a ``beta`` share backbone.

    The padded formula is satisfiable exactly when the base is, and in
    that case the tail variables are all forced true, giving a backbone
    of at least ``beta`` times the padded variable count.
    """
    beta = check_beta(beta)
    count = tail_length(base, beta)
    tail = fresh_variables(base, count)
    padded = prop.And(base, *(prop.Atom(v) for v in tail))
    return BackboneFamilyInstance(padded, base, tuple(tail), beta)


def recognize_backbone_family(
    formula: prop.PropFormula, beta
) -> BackboneFamilyInstance | None:
    """Decide membership: a conjunction of a base with its exact fresh tail.

    Tries every split of the top-level conjunction into a base prefix and
    an all-atoms suffix, longest suffix first, and accepts when the
    suffix is exactly the first ``tail_length(base, beta)`` fresh
    variables of the base in ascending order.
    """
    beta = check_beta(beta)
    if not isinstance(formula, prop.And) or len(formula.children) < 2:
        return None
    children = formula.children
    for split in range(1, len(children)):
        suffix = children[split:]
        if not all(isinstance(c, prop.Atom) for c in suffix):
            continue
        base = children[0] if split == 1 else prop.And(*children[:split])
        if not base.variables:
            continue
        tail = tuple(c.var for c in suffix)
        expected = tail_length(base, beta)
        if len(tail) != expected:
            continue
        if list(tail) != fresh_variables(base, expected):
            continue
        return BackboneFamilyInstance(formula, base, tail, beta)
    return None


def reduce_sat_to_large_backbone(formula: prop.PropFormula, beta) -> prop.PropFormula:
    """Map any formula to one whose large-backbone status mirrors its own
    satisfiability.

    Formulas with at least one variable are padded directly.  Formulas
    without variables are evaluated and mapped to a fixed member (padding
    of a single atom) or fixed non-member (padding of a contradiction).
    """
    beta = check_beta(beta)
    if not formula.variables:
        if prop.evaluate(formula, {}):
            pinned: prop.PropFormula = prop.Atom(1)
        else:
            pinned = prop.And(prop.Atom(1), prop.Not(prop.Atom(1)))
        return pad_backbone_family(pinned, beta).padded
    return pad_backbone_family(formula, beta).padded


# -- composition with an external reduction ---------------------------------


@dataclass(frozen=True)
class BackdoorFamily:
    k: int


@dataclass(frozen=True)
class BackboneFamily:
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", check_beta(self.beta))


@dataclass(frozen=True)
class LengthReport:
    """Byte accounting of a padded reduction under the canonical encodings."""

    input_length: int
    base_length: int
    tail_length: int
    total_length: int
    tail_count: int

    def to_json_dict(self) -> dict:
        return {
            "input_length": self.input_length,
            "base_length": self.base_length,
            "tail_length": self.tail_length,
            "total_length": self.total_length,
            "tail_count": self.tail_count,
        }


ReductionHook = Callable[[str], str] | str | Sequence[str]


def compose_padded_reduction(
    hook: ReductionHook, family: BackdoorFamily | BackboneFamily, text: str
) -> tuple[BackdoorFamilyInstance | BackboneFamilyInstance, LengthReport]:
    """Run an external reduction and pad its output formula.

    ``hook`` is either a callable from input text to formula text or an
    executable (command string or argv sequence) that reads the input on
    stdin and writes the formula on stdout; a nonzero exit status raises
    ReductionHookFailure.  CNF output is read as DIMACS; for the backbone
    family a general formula in the grammar is accepted as well.  Length
    accounting uses this toolkit's canonical emitters as the encoding,
    with the tail measured as the emitted growth over the base.
    """
    produced = _run_hook(hook, text)
    if isinstance(family, BackdoorFamily):
        base_cnf = _parse_hook_cnf(produced)
        instance = pad_backdoor_family(base_cnf, family.k)
        base_text = emit_dimacs(instance.base)
        total_text = emit_dimacs(instance.padded)
    else:
        base_formula = _parse_hook_formula(produced)
        instance = pad_backbone_family(base_formula, family.beta)
        base_text = emit_formula(instance.base)
        total_text = emit_formula(instance.padded)
    report = LengthReport(
        input_length=len(text.encode()),
        base_length=len(base_text.encode()),
        tail_length=len(total_text.encode()) - len(base_text.encode()),
        total_length=len(total_text.encode()),
        tail_count=len(instance.tail_vars),
    )
    return instance, report


def _run_hook(hook: ReductionHook, text: str) -> str:
    if callable(hook):
        try:
            return hook(text)
        except Exception as exc:
            raise ReductionHookFailure(f"reduction hook raised: {exc}") from exc
    argv = [hook] if isinstance(hook, str) else list(hook)
    try:
        completed = subprocess.run(
            argv, input=text.encode(), capture_output=True, check=False
        )
    except OSError as exc:
        raise ReductionHookFailure(f"could not run {argv!r}: {exc}") from exc
    if completed.returncode != 0:
        stderr = completed.stderr.decode(errors="replace").strip()
        raise ReductionHookFailure(
            f"hook exited with status {completed.returncode}: {stderr}"
        )
    return completed.stdout.decode()


def _looks_like_dimacs(text: str) -> bool:
    return any(
        line.lstrip().startswith("p cnf") for line in text.splitlines()
    )


def _parse_hook_cnf(text: str) -> CnfFormula:
    if not _looks_like_dimacs(text):
        raise ReductionHookFailure("hook output is not DIMACS CNF")
    return parse_dimacs(text)


def _parse_hook_formula(text: str) -> prop.PropFormula:
    if _looks_like_dimacs(text):
        from .core import cnf_to_prop

        return cnf_to_prop(parse_dimacs(text))
    return parse_formula(text)


def family_metadata_comment(instance) -> str:
    """Advisory metadata payload written after the ``opaque-sat`` marker.

    The DIMACS emitter expects the full comment text (so callers prepend
    the marker there); the formula emitter adds the marker itself.
    Recognizers never read these lines.
    """
    if isinstance(instance, BackdoorFamilyInstance):
        return f"family=backdoor k={instance.k} base-vars={len(instance.base.variables)}"
    beta = instance.beta
    return (
        f"family=backbone beta={beta.numerator}/{beta.denominator} "
        f"q={len(instance.tail_vars)}"
    )

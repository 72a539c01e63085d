"""DIMACS CNF reading and writing.

Reading is lenient where real-world files are sloppy: clauses may span
lines, a final unterminated clause is flushed with a warning, a ``%``
line ends the input (the SATLIB convention), and header counts that
disagree with the body produce warnings rather than errors, since set
semantics collapses duplicates anyway.  Writing is canonical and byte
deterministic: literals sorted by variable with positive polarity first,
clauses sorted lexicographically, one clause per line.
"""

from __future__ import annotations

import warnings
from typing import Iterable

from .core import CnfFormula, clause_key, literal_key
from .errors import (
    DimacsWarning,
    DuplicateInputWarning,
    HeaderMismatchWarning,
    ParseError,
)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text into a set-semantics formula."""
    declared_vars: int | None = None
    declared_clauses: int | None = None
    clauses: list[frozenset[int]] = []
    current: list[int] = []
    duplicate_literals = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if declared_vars is not None:
                raise ParseError("duplicate problem line", lineno, 1)
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError("malformed problem line, expected 'p cnf <vars> <clauses>'", lineno, 1)
            try:
                declared_vars = int(fields[2])
                declared_clauses = int(fields[3])
            except ValueError:
                raise ParseError("problem line counts must be integers", lineno, 1) from None
            if declared_vars < 0 or declared_clauses < 0:
                raise ParseError("problem line counts must be nonnegative", lineno, 1)
            continue
        if declared_vars is None:
            raise ParseError("clause data before the problem line", lineno, 1)
        scan = 0
        for token in raw.split():
            start = raw.index(token, scan)
            scan = start + len(token)
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(
                    f"expected an integer literal, got {token!r}", lineno, start + 1
                ) from None
            if lit == 0:
                before = len(current)
                clause = frozenset(current)
                if len(clause) < before:
                    duplicate_literals += before - len(clause)
                clauses.append(clause)
                current = []
            else:
                current.append(lit)

    if declared_vars is None:
        raise ParseError("missing 'p cnf' problem line")
    if current:
        warnings.warn(
            "final clause not terminated by 0, flushing it",
            DimacsWarning,
            stacklevel=2,
        )
        clause = frozenset(current)
        if len(clause) < len(current):
            duplicate_literals += len(current) - len(clause)
        clauses.append(clause)

    formula = CnfFormula(clauses)
    duplicate_clauses = len(clauses) - len(formula.clauses)
    if duplicate_literals or duplicate_clauses:
        warnings.warn(
            f"collapsed {duplicate_clauses} duplicate clause(s) and "
            f"{duplicate_literals} duplicate literal(s)",
            DuplicateInputWarning,
            stacklevel=2,
        )
    max_var = max(formula.variables, default=0)
    if max_var > declared_vars or len(clauses) != declared_clauses:
        warnings.warn(
            f"header declares {declared_vars} variable(s) and {declared_clauses} "
            f"clause(s), body has max variable {max_var} and {len(clauses)} clause(s)",
            HeaderMismatchWarning,
            stacklevel=2,
        )
    return formula


def emit_dimacs(formula: CnfFormula, comments: Iterable[str] = ()) -> str:
    """Serialize to canonical DIMACS text, one sorted clause per line."""
    lines = [f"c {comment}" if comment else "c" for comment in comments]
    max_var = max(formula.variables, default=0)
    lines.append(f"p cnf {max_var} {len(formula.clauses)}")
    for clause in sorted(formula.clauses, key=clause_key):
        lits = sorted(clause, key=literal_key)
        lines.append(" ".join(str(l) for l in lits) + (" 0" if lits else "0"))
    return "\n".join(lines) + "\n"

"""Hypothesis strategies for formulas and assignments."""

from __future__ import annotations

from hypothesis import strategies as st

from opaquesat import And, Atom, CnfFormula, FALSE, Iff, Implies, Not, Or, TRUE


def literals(max_vars: int):
    return st.integers(1, max_vars).flatmap(
        lambda v: st.sampled_from([v, -v])
    )


def clauses(max_vars: int, max_width: int = 3):
    return st.frozensets(literals(max_vars), min_size=0, max_size=max_width)


@st.composite
def cnf_formulas(draw, max_vars: int = 6, max_clauses: int = 8, max_width: int = 3,
                 allow_empty_clause: bool = True):
    cs = draw(
        st.lists(clauses(max_vars, max_width), min_size=0, max_size=max_clauses)
    )
    if not allow_empty_clause:
        cs = [c for c in cs if c]
    return CnfFormula(cs)


def prop_formulas(max_vars: int = 5, max_leaves: int = 12):
    leaves = st.one_of(
        st.integers(1, max_vars).map(Atom),
        st.sampled_from([TRUE, FALSE]),
    )

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.lists(children, min_size=1, max_size=3).map(lambda cs: And(*cs)),
            st.lists(children, min_size=1, max_size=3).map(lambda cs: Or(*cs)),
            st.tuples(children, children).map(lambda p: Implies(*p)),
            st.tuples(children, children).map(lambda p: Iff(*p)),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@st.composite
def assignments_for(draw, variables, full: bool = False):
    vs = sorted(variables)
    if not full:
        vs = draw(st.lists(st.sampled_from(vs), unique=True)) if vs else []
    return {v: draw(st.booleans()) for v in vs}

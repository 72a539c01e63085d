"""Formula trees: evaluation and substitution with constant folding."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opaquesat import (
    And,
    Atom,
    Const,
    FALSE,
    Iff,
    Implies,
    Not,
    Or,
    TRUE,
    UnboundVariable,
    evaluate,
    substitute,
)
from strategies import assignments_for, prop_formulas


class TestEvaluate:
    def test_chain_formula_model(self, chain_prop):
        model = {1: True, 2: False, 3: False, 4: True, 5: False}
        assert evaluate(chain_prop, model) is True

    def test_constant_true_under_empty(self):
        assert evaluate(TRUE, {}) is True

    def test_unbound_atom(self):
        with pytest.raises(UnboundVariable):
            evaluate(And(Atom(1), Atom(2)), {1: True})

    @pytest.mark.parametrize(
        "phi,expected",
        [
            (Implies(TRUE, FALSE), False),
            (Implies(FALSE, FALSE), True),
            (Iff(FALSE, FALSE), True),
            (Iff(TRUE, FALSE), False),
            (Not(FALSE), True),
        ],
    )
    def test_connective_tables(self, phi, expected):
        assert evaluate(phi, {}) is expected


class TestSubstitute:
    def test_binding_folds_biconditional(self):
        phi = And(Atom(1), Iff(Atom(1), Not(Atom(2))))
        assert substitute(phi, {1: True}) == Not(Atom(2))

    def test_constant_untouched(self):
        assert substitute(TRUE, {1: False}) == TRUE

    def test_irrelevant_bindings_ignored(self):
        phi = Or(Atom(1), Atom(2))
        assert substitute(phi, {7: True}) == phi

    def test_no_equivalence_rewriting(self):
        # repeated operands are preserved, only constants fold
        phi = And(Atom(1), Atom(1))
        assert substitute(phi, {}) == phi

    @given(data=st.data(), phi=prop_formulas(max_vars=5))
    @settings(max_examples=200, deadline=None)
    def test_truth_table_preserved(self, data, phi):
        assignment = data.draw(assignments_for(phi.variables))
        folded = substitute(phi, assignment)
        assert not (set(assignment) & set(folded.variables))
        free = sorted(set(phi.variables) - set(assignment))
        for values in itertools.product((False, True), repeat=len(free)):
            rest = dict(zip(free, values))
            assert evaluate(folded, rest) == evaluate(phi, {**assignment, **rest})

    @given(phi=prop_formulas(max_vars=4), data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_total_substitution_yields_constant(self, data, phi):
        assignment = data.draw(assignments_for(phi.variables, full=True))
        folded = substitute(phi, assignment)
        assert isinstance(folded, Const)
        assert folded.value == evaluate(phi, assignment)


class TestNodeInvariants:
    def test_nary_needs_children(self):
        with pytest.raises(ValueError):
            And()
        with pytest.raises(ValueError):
            Or()

    def test_atom_index_positive(self):
        with pytest.raises(ValueError):
            Atom(0)

    def test_equality_is_structural(self):
        assert And(Atom(1), Atom(2)) == And(Atom(1), Atom(2))
        assert And(Atom(1), Atom(2)) != And(Atom(2), Atom(1))
        assert And(Atom(1), Atom(2)) != Or(Atom(1), Atom(2))

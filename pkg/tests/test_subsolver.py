"""Unit propagation subsolver: worked cases, axioms, reference equivalence."""

import random

from hypothesis import given, settings

from conftest import all_models, naive_up, random_formula
from opaquesat import (
    CnfFormula,
    assign_and_simplify,
    is_trivially_false,
    is_trivially_true,
    satisfies,
    up_decided,
    up_subsolve,
)
from strategies import cnf_formulas


class TestWorkedCases:
    def test_prefers_lowest_variable_unit(self):
        outcome = up_subsolve(CnfFormula([[-4], [2]]))
        assert outcome.determined
        assert outcome.result.satisfiable
        assert outcome.trace[0].clause == frozenset({2})
        assert outcome.trace[0].variable == 2
        assert outcome.trace[0].value is True
        # the remaining unit then forces x4 false
        assert outcome.trace[1].clause == frozenset({-4})
        assert outcome.result.model == {2: True, 4: False}

    def test_empty_formula_satisfiable_with_empty_model(self):
        outcome = up_subsolve(CnfFormula())
        assert outcome.determined
        assert outcome.result.satisfiable
        assert outcome.result.model == {}

    def test_wide_clause_rejected(self):
        outcome = up_subsolve(CnfFormula([[1, 2]]))
        assert outcome.rejected

    def test_contradicting_units(self):
        outcome = up_subsolve(CnfFormula([[1], [-1]]))
        assert outcome.determined
        assert not outcome.result.satisfiable
        # propagates x1 true first, then sees the empty clause
        assert len(outcome.trace) == 1
        assert outcome.trace[0].clause == frozenset({1})

    def test_positive_before_negative_on_same_variable(self):
        outcome = up_subsolve(CnfFormula([[-1], [1]]))
        assert outcome.trace[0].clause == frozenset({1})

    def test_demo_formula_rejected(self, demo_cnf):
        assert not up_decided(demo_cnf)

    def test_single_unit_decided(self):
        assert up_decided(CnfFormula([[3]]))


class TestReferenceEquivalence:
    @given(formula=cnf_formulas(max_vars=6, max_clauses=10))
    @settings(max_examples=300, deadline=None)
    def test_matches_iterated_simplification(self, formula):
        verdict, trace, model = naive_up(formula)
        outcome = up_subsolve(formula)
        if verdict == "rejects":
            assert outcome.rejected
        else:
            assert outcome.determined
            assert outcome.result.satisfiable == (verdict == "satisfiable")
            assert outcome.result.model == model
        assert [(s.clause, s.variable, s.value) for s in outcome.trace] == trace


class TestSubsolverAxioms:
    def test_soundness_randomized(self):
        rng = random.Random(4821)
        for _ in range(400):
            f = random_formula(rng, max_vars=8, max_clauses=12)
            outcome = up_subsolve(f)
            if outcome.rejected:
                continue
            if outcome.result.satisfiable:
                assert satisfies(f, outcome.result.model)
            else:
                assert all_models(f) == []

    def test_trivial_formulas_always_determined(self):
        rng = random.Random(77)
        for _ in range(100):
            f = random_formula(rng, max_vars=6, max_clauses=6)
            if is_trivially_true(f):
                assert up_subsolve(f).result.satisfiable
            with_empty = CnfFormula(list(f.clauses) + [[]])
            assert is_trivially_false(with_empty)
            outcome = up_subsolve(with_empty)
            assert outcome.determined
            assert not outcome.result.satisfiable

    def test_empty_clause_beats_units(self):
        # determination must happen even when unit clauses coexist
        outcome = up_subsolve(CnfFormula([[], [1]]))
        assert outcome.determined
        assert not outcome.result.satisfiable
        assert outcome.trace == ()

    def test_decided_closed_under_substitution(self):
        rng = random.Random(99)
        checked = 0
        for _ in range(600):
            f = random_formula(rng, max_vars=6, max_clauses=8)
            if not up_decided(f):
                continue
            checked += 1
            for v in f.variables:
                for value in (False, True):
                    assert up_decided(assign_and_simplify(f, {v: value}))
        assert checked > 50

    @given(formula=cnf_formulas(max_vars=8, max_clauses=10))
    @settings(max_examples=100, deadline=None)
    def test_trace_bounded_by_variable_count(self, formula):
        outcome = up_subsolve(formula)
        assert len(outcome.trace) <= len(formula.variables)

    @given(formula=cnf_formulas(max_vars=8, max_clauses=10))
    @settings(max_examples=100, deadline=None)
    def test_deterministic(self, formula):
        assert up_subsolve(formula) == up_subsolve(formula)


class TestTraceSerialization:
    def test_json_shape(self):
        outcome = up_subsolve(CnfFormula([[2], [-4]]))
        payload = outcome.to_json_dict()
        assert payload["outcome"] == "determines"
        assert payload["trace"][0] == {
            "step": 0,
            "clause": [2],
            "variable": 2,
            "value": True,
        }

"""Backbone detection: worked chain formula, characterization, closure."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_models, random_formula
from opaquesat import (
    And,
    Atom,
    CnfFormula,
    InvalidBeta,
    Not,
    Or,
    TooManyVariables,
    VariableNotInFormula,
    backbone_fixed_variables,
    brute_force_solve,
    cnf_to_prop,
    has_large_backbone,
    has_nontrivial_backbone,
    is_backbone,
)
from strategies import cnf_formulas, prop_formulas


def fixed_via_models(formula) -> tuple[bool, dict[int, bool]]:
    """Reference maximal backbone straight from the model list."""
    found = all_models(formula)
    if not found:
        return False, {}
    fixed = {}
    for v in sorted(formula.variables):
        values = {m[v] for m in found}
        if len(values) == 1:
            fixed[v] = values.pop()
    return True, fixed


class TestWorkedChainFormula:
    def test_fixed_variables(self, chain_prop):
        report = backbone_fixed_variables(chain_prop)
        assert report.satisfiable
        assert dict(report.fixed) == {1: True, 2: False, 3: False}

    def test_forced_chain_is_backbone(self, chain_prop):
        assert is_backbone(chain_prop, {1, 2, 3})

    def test_every_subset_is_backbone(self, chain_prop):
        for size in range(0, 4):
            for subset in itertools.combinations((1, 2, 3), size):
                assert is_backbone(chain_prop, subset)

    def test_empty_set_is_trivial_backbone(self, chain_prop):
        assert is_backbone(chain_prop, set())

    def test_loose_variables_break_it(self, chain_prop):
        for subset in ({4}, {5}, {1, 4}, {2, 5}, {1, 2, 3, 4}, {4, 5}):
            assert not is_backbone(chain_prop, subset)

    def test_large_backbone_thresholds(self, chain_prop):
        assert has_large_backbone(chain_prop, Fraction(3, 5))
        assert not has_large_backbone(chain_prop, Fraction(4, 5))
        assert has_nontrivial_backbone(chain_prop)


class TestEdgeCases:
    def test_no_nontrivial_backbone(self):
        wide = Or(Atom(1), Atom(2), Atom(3))
        assert not has_nontrivial_backbone(wide)
        assert not is_backbone(wide, {1})
        assert is_backbone(wide, set())

    def test_unsatisfiable_has_no_backbone_at_all(self):
        f = CnfFormula([[]])
        report = backbone_fixed_variables(f)
        assert not report.satisfiable
        assert report.fixed == {}
        assert not is_backbone(f, set())
        assert not has_large_backbone(f, Fraction(1, 2))

    def test_single_forced_variable(self):
        assert has_nontrivial_backbone(Atom(1))

    def test_both_values_flip(self):
        report = backbone_fixed_variables(CnfFormula([[1, 2]]))
        assert report.satisfiable
        assert report.fixed == {}

    def test_foreign_variable(self, chain_prop):
        with pytest.raises(VariableNotInFormula):
            is_backbone(chain_prop, {9})

    def test_invalid_beta(self, chain_prop):
        for bad in (0, 1, Fraction(5, 4), Fraction(-1, 2)):
            with pytest.raises(InvalidBeta):
                has_large_backbone(chain_prop, bad)

    def test_component_cap_applies_per_component(self):
        # 30 independent single-variable conjuncts exceed the whole-formula
        # cap but each component is tiny
        phi = And(*(Atom(v) for v in range(1, 31)))
        report = backbone_fixed_variables(phi)
        assert report.satisfiable
        assert len(report.fixed) == 30

    def test_entangled_component_still_capped(self):
        big = Or(*(Atom(v) for v in range(1, 30)))
        with pytest.raises(TooManyVariables):
            backbone_fixed_variables(big)


class TestCharacterization:
    @given(formula=cnf_formulas(max_vars=4, max_clauses=6))
    @settings(max_examples=120, deadline=None)
    def test_backbones_are_exactly_subsets_of_fixed(self, formula):
        report = backbone_fixed_variables(formula)
        sat_ref, fixed_ref = fixed_via_models(formula)
        assert report.satisfiable == sat_ref
        assert dict(report.fixed) == fixed_ref
        vs = sorted(formula.variables)
        for size in range(0, len(vs) + 1):
            for subset in itertools.combinations(vs, size):
                expected = report.satisfiable and set(subset) <= set(report.fixed)
                assert is_backbone(formula, subset) == expected

    @given(phi=prop_formulas(max_vars=5))
    @settings(max_examples=120, deadline=None)
    def test_prop_report_matches_model_reference(self, phi):
        report = backbone_fixed_variables(phi)
        sat_ref, fixed_ref = fixed_via_models(phi)
        assert report.satisfiable == sat_ref
        assert dict(report.fixed) == fixed_ref

    @given(data=st.data(), phi=prop_formulas(max_vars=5))
    @settings(max_examples=100, deadline=None)
    def test_downward_closure(self, data, phi):
        report = backbone_fixed_variables(phi)
        if not report.fixed:
            return
        backbone = sorted(report.fixed)
        assert is_backbone(phi, backbone)
        sub = data.draw(st.lists(st.sampled_from(backbone), unique=True))
        assert is_backbone(phi, sub)

    def test_forced_value_soundness(self):
        rng = random.Random(808)
        for _ in range(120):
            f = random_formula(rng, max_vars=7, max_clauses=12)
            report = backbone_fixed_variables(f)
            for v, b in report.fixed.items():
                from opaquesat import assign_and_simplify

                flipped = assign_and_simplify(f, {v: not b})
                assert not brute_force_solve(flipped).satisfiable


class TestCnfFastPathAgreesWithPropPath:
    @given(formula=cnf_formulas(max_vars=6, max_clauses=9))
    @settings(max_examples=120, deadline=None)
    def test_same_report_for_both_views(self, formula):
        direct = backbone_fixed_variables(formula)
        via_prop = backbone_fixed_variables(cnf_to_prop(formula))
        assert direct.satisfiable == via_prop.satisfiable
        assert dict(direct.fixed) == dict(via_prop.fixed)


class TestReportSerialization:
    def test_sorted_by_variable(self, chain_prop):
        payload = backbone_fixed_variables(chain_prop).to_json_dict()
        assert payload == {
            "satisfiable": True,
            "fixed": [[1, True], [2, False], [3, False]],
        }

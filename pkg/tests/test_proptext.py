"""Grammar parsing and emission for formula trees."""

import itertools

import pytest
from hypothesis import given, settings

from opaquesat import (
    And,
    Atom,
    FALSE,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    TRUE,
    emit_formula,
    evaluate,
    parse_formula,
)
from strategies import prop_formulas


class TestParse:
    def test_worked_expression(self):
        phi = parse_formula("x1 & (x1 <-> !x2)")
        assert phi == And(Atom(1), Iff(Atom(1), Not(Atom(2))))

    def test_constants(self):
        assert parse_formula("T | F") == Or(TRUE, FALSE)

    def test_precedence(self):
        phi = parse_formula("!x1 & x2 | x3 -> x4 <-> x5")
        assert phi == Iff(
            Implies(Or(And(Not(Atom(1)), Atom(2)), Atom(3)), Atom(4)), Atom(5)
        )

    def test_chains_flatten(self):
        assert parse_formula("x1 & x2 & x3") == And(Atom(1), Atom(2), Atom(3))
        assert parse_formula("x1 | x2 | x3") == Or(Atom(1), Atom(2), Atom(3))

    def test_parenthesized_subterms_keep_their_node(self):
        assert parse_formula("(x1 & x2) & x3") == And(And(Atom(1), Atom(2)), Atom(3))

    def test_arrows_right_associative(self):
        assert parse_formula("x1 -> x2 -> x3") == Implies(Atom(1), Implies(Atom(2), Atom(3)))
        assert parse_formula("x1 <-> x2 <-> x3") == Iff(Atom(1), Iff(Atom(2), Atom(3)))

    def test_metadata_comment_skipped(self):
        assert parse_formula("c opaque-sat family=backbone beta=1/2 q=2\nx1 & x2\n") == And(
            Atom(1), Atom(2)
        )

    @pytest.mark.parametrize(
        "text",
        ["", "x", "x0", "x1 &", "(x1", "x1 x2", "x1 <- x2", "1 & 2", "x1 && x2"],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError):
            parse_formula(text)

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_formula("x1 & ?")
        assert info.value.line == 1
        assert info.value.column == 6


class TestEmit:
    def test_readable_output(self):
        phi = And(Atom(1), Iff(Atom(1), Not(Atom(2))))
        assert emit_formula(phi) == "x1 & (x1 <-> !x2)\n"

    def test_negation_parenthesizes_weaker(self):
        assert emit_formula(Not(And(Atom(1), Atom(2)))) == "!(x1 & x2)\n"
        assert emit_formula(Not(Not(Atom(1)))) == "!!x1\n"

    def test_comment_lines_carry_marker(self):
        text = emit_formula(Atom(1), comments=("family=backbone",))
        assert text == "c opaque-sat family=backbone\nx1\n"
        assert parse_formula(text) == Atom(1)

    @given(phi=prop_formulas(max_vars=5))
    @settings(max_examples=300, deadline=None)
    def test_round_trip_exact(self, phi):
        assert parse_formula(emit_formula(phi)) == phi

    @given(phi=prop_formulas(max_vars=4, max_leaves=8))
    @settings(max_examples=100, deadline=None)
    def test_round_trip_preserves_semantics(self, phi):
        back = parse_formula(emit_formula(phi))
        vs = sorted(phi.variables)
        for values in itertools.product((False, True), repeat=len(vs)):
            m = dict(zip(vs, values))
            assert evaluate(back, m) == evaluate(phi, m)

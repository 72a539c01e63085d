"""Seeded random CNF generation."""

import warnings

import pytest

from opaquesat import InvalidParameters, emit_dimacs, parse_dimacs, random_cnf


def test_same_seed_same_formula():
    a = random_cnf(12, 50, 3, seed=7)
    b = random_cnf(12, 50, 3, seed=7)
    assert a == b


def test_different_seeds_differ():
    assert random_cnf(12, 50, 3, seed=7) != random_cnf(12, 50, 3, seed=8)


def test_shape_constraints():
    f = random_cnf(12, 50, 3, seed=1)
    assert len(f.clauses) <= 50
    assert all(len({abs(l) for l in c}) == 3 for c in f.clauses)
    assert f.variables <= frozenset(range(1, 13))


def test_dedup_can_shrink():
    f = random_cnf(3, 100, 3, seed=2)
    assert len(f.clauses) < 100  # only 8 distinct width-3 clauses over 3 vars


def test_round_trips_through_dimacs():
    f = random_cnf(10, 30, 3, seed=3)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_dimacs(emit_dimacs(f)) == f


@pytest.mark.parametrize("n_vars,n_clauses,width", [(2, 5, 3), (0, 1, 1), (5, -1, 2), (5, 5, 0)])
def test_invalid_parameters(n_vars, n_clauses, width):
    with pytest.raises(InvalidParameters):
        random_cnf(n_vars, n_clauses, width, seed=0)

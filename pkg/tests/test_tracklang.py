import random

import pytest
from hypothesis import given, settings, strategies as st

from eqlab.tracklang import (X, Compose, ConflictingTable, Const, Exhausted, IfZero, Loop, Pair, ParseError,
                             Pred, Succ, Value, budget_monotone, cantor_pair, cantor_unpair, evaluate, parse,
                             random_program, run, synthesize_table_tracker, table_budget, to_source)


def test_input_program():
    assert run(X, 7, 1) == 7


def test_successor_twice():
    assert run(Compose(Succ(X), Succ(X)), 0, 100) == 2


def test_countdown_needs_budget():
    p = Loop(Pred(X), X)
    assert isinstance(evaluate(p, 10, 5), Exhausted)
    assert evaluate(p, 10, 100) == Value(0, 22)


def test_pair_values():
    assert cantor_pair(0, 0) == 0
    assert cantor_pair(1, 2) == 8
    assert cantor_pair(0, 4) == 14


def test_pair_round_trip_up_to_ten_thousand():
    for k in range(10_001):
        assert cantor_pair(*cantor_unpair(k)) == k


@given(st.integers(0, 10**40), st.integers(0, 10**40))
def test_pair_is_exact_on_big_numbers(n, m):
    assert cantor_unpair(cantor_pair(n, m)) == (n, m)


def test_table_trackers():
    assert synthesize_table_tracker([]) == Const(0)
    assert run(synthesize_table_tracker([(5, 9)]), 5, 10) == 9
    p = synthesize_table_tracker([(0, 1), (3, 0)])
    assert run(p, 0, 20) == 1 and run(p, 3, 20) == 0
    with pytest.raises(ConflictingTable):
        synthesize_table_tracker([(1, 2), (1, 3)])


@settings(max_examples=50)
@given(st.dictionaries(st.integers(0, 500), st.integers(0, 500), max_size=40))
def test_table_trackers_are_fast_and_right(table):
    p = synthesize_table_tracker(table.items())
    for k, v in table.items():
        assert run(p, k, table_budget(len(table))) == v


def test_parse_and_print():
    src = "(ifz (sub x 3) (pair x 1) (loop (pred x) x))"
    p = parse(src)
    assert to_source(p) == src
    assert p == IfZero(parse("(sub x 3)"), Pair(X, Const(1)), Loop(Pred(X), X))


@pytest.mark.parametrize("bad", ["(", "(succ)", "(foo x)", "y", "x x", ")", "(succ x"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_bad_arguments():
    with pytest.raises(ValueError):
        evaluate(X, -1, 5)
    with pytest.raises(ValueError):
        evaluate(X, 1, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 500), st.integers(1, 80), st.integers(0, 200))
def test_more_budget_never_changes_a_result(seed, n, low, extra):
    p = random_program(random.Random(seed))
    assert budget_monotone(p, n, low, low + extra)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_random_programs_round_trip_through_the_syntax(seed):
    p = random_program(random.Random(seed))
    assert parse(to_source(p)) == p

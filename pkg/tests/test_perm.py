import pytest
from hypothesis import given
from hypothesis import strategies as st

from gstruct.perm import (
    compose,
    cycles,
    format_cycles,
    identity,
    inverse,
    is_identity,
    parse_cycles,
    perm_order,
    power,
)


def _perm_strategy(max_degree=12):
    return st.integers(2, max_degree).flatmap(
        lambda n: st.permutations(list(range(n))).map(tuple)
    )


def test_two_transpositions_compose_to_three_cycle():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    assert perm_order(compose(p, q)) == 3


def test_compose_identity():
    p = parse_cycles("(1,3,2)", 4)
    assert compose(p, identity(4)) == p
    assert compose(identity(4), p) == p


def test_three_cycle_squared():
    p = parse_cycles("(1,2,3)", 3)
    assert compose(p, p) == parse_cycles("(1,3,2)", 3)


def test_convention_applies_left_factor_first():
    # compose(p, q)[i] = q[p[i]]
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(1,3)", 3)
    assert compose(p, q)[0] == q[p[0]] == 1


def test_order_examples():
    assert perm_order(identity(5)) == 1
    assert perm_order(parse_cycles("(1,2,3,4,5)", 5)) == 5
    assert perm_order(parse_cycles("(1,2)(3,4,5)", 5)) == 6


@given(_perm_strategy())
def test_inverse_cancels(p):
    assert is_identity(compose(p, inverse(p)))
    assert is_identity(compose(inverse(p), p))


@given(_perm_strategy())
def test_cycle_roundtrip(p):
    assert parse_cycles(format_cycles(p), len(p)) == p


@given(_perm_strategy(), st.integers(-6, 6))
def test_power_matches_iteration(p, k):
    expected = identity(len(p))
    step = p if k >= 0 else inverse(p)
    for _ in range(abs(k)):
        expected = compose(expected, step)
    assert power(p, k) == expected


def test_parse_rejects_garbage():
    for bad in ["", "1,2", "(1,2", "(0,1)", "(1,1)", "(1,2)(2,3)"]:
        with pytest.raises(ValueError):
            parse_cycles(bad, 4)


def test_identity_notation():
    assert parse_cycles("()", 3) == identity(3)
    assert format_cycles(identity(3)) == "()"


def test_cycles_start_at_least_point():
    p = parse_cycles("(2,4)(1,3,5)", 5)
    assert cycles(p) == [(0, 2, 4), (1, 3)]

"""Seat permutations: composition convention, cycle forms, pinned enumeration."""
import itertools

import pytest
from hypothesis import given, strategies as st

from gamesym.permutation import (
    check_perm,
    compose,
    compose_all,
    cycles,
    enumerate_constrained,
    enumerate_perms,
    from_cycles,
    identity,
    inverse,
    perm_str,
)

perms3 = st.permutations(range(3)).map(tuple)
perms5 = st.permutations(range(5)).map(tuple)


def t4(*cycle_lists):
    return from_cycles(4, list(cycle_lists))


def test_identity():
    assert identity(4) == (0, 1, 2, 3)
    assert perm_str(identity(4)) == "()"


def test_check_perm_rejects_non_permutations():
    assert check_perm([1, 0, 2]) == (1, 0, 2)
    with pytest.raises(ValueError):
        check_perm((0, 0, 1))
    with pytest.raises(ValueError):
        check_perm((1, 2, 3))


def test_compose_applies_right_factor_first():
    # (1 3) after (1 2) is the 3-cycle (1 2 3)
    assert compose(from_cycles(3, [(0, 2)]), from_cycles(3, [(0, 1)])) == from_cycles(3, [(0, 1, 2)])


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


def test_compose_all_left_to_right():
    a, b, c = (1, 0, 2), (0, 2, 1), (2, 1, 0)
    assert compose_all([a, b, c]) == compose(compose(a, b), c)
    with pytest.raises(ValueError):
        compose_all([])


def test_transposition_chain_collapses_to_single_swap():
    # Seats i,j,k,l = 1,2,3,4.  The nine-factor product
    # (i j)(j k)(i l)(j k)(i j)(k l)(i j)(j k)(i l) and its five-factor
    # reduction (i j)(i l)(k l)(j k)(i l) both equal (i k).
    chain9 = [
        t4((0, 1)), t4((1, 2)), t4((0, 3)),
        t4((1, 2)), t4((0, 1)), t4((2, 3)),
        t4((0, 1)), t4((1, 2)), t4((0, 3)),
    ]
    chain5 = [t4((0, 1)), t4((0, 3)), t4((2, 3)), t4((1, 2)), t4((0, 3))]
    assert compose_all(chain9) == t4((0, 2))
    assert compose_all(chain5) == t4((0, 2))


def test_cycles_canonical_form():
    assert cycles((1, 2, 0)) == ((0, 1, 2),)
    assert cycles((1, 0, 3, 2)) == ((0, 1), (2, 3))
    assert cycles((0, 1, 2)) == ()


def test_from_cycles_round_trip():
    sigma = from_cycles(5, [(0, 2, 4), (1, 3)])
    assert from_cycles(5, list(cycles(sigma))) == sigma


def test_from_cycles_rejects_bad_members():
    with pytest.raises(ValueError):
        from_cycles(4, [(0, 4)])
    with pytest.raises(ValueError):
        from_cycles(4, [(0, 1), (1, 2)])


def test_perm_str_one_based():
    assert perm_str((1, 0, 3, 2)) == "(1 2)(3 4)"
    assert perm_str((1, 2, 0)) == "(1 2 3)"


def test_enumerate_perms_lexicographic():
    got = list(enumerate_perms(3))
    assert got == sorted(itertools.permutations(range(3)))


def test_enumerate_constrained_pins_and_order():
    got = list(enumerate_constrained(4, {0: 1}))
    assert len(got) == 6
    assert all(sigma[0] == 1 for sigma in got)
    assert got == sorted(got)
    assert got[0] == (1, 0, 2, 3)


def test_enumerate_constrained_two_pins():
    got = list(enumerate_constrained(4, {0: 1, 1: 0}))
    assert got == [(1, 0, 2, 3), (1, 0, 3, 2)]


def test_enumerate_constrained_rejects_non_injective_pins():
    with pytest.raises(ValueError):
        list(enumerate_constrained(3, {0: 1, 1: 1}))


@given(perms5, perms5, perms5)
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms5)
def test_inverse_cancels(sigma):
    assert compose(sigma, inverse(sigma)) == identity(5)
    assert compose(inverse(sigma), sigma) == identity(5)


@given(perms3)
def test_identity_neutral(sigma):
    assert compose(sigma, identity(3)) == sigma
    assert compose(identity(3), sigma) == sigma


@given(perms5)
def test_cycle_form_round_trips(sigma):
    assert from_cycles(5, list(cycles(sigma))) == sigma

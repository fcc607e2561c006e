"""Game containers, exact rationals, the profile action, and the file format."""
import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gamesym.game import (
    Game,
    GameFormatError,
    act,
    commutative_image,
    extend,
    format_rational,
    parse_game,
    parse_rational,
    restrict,
    serialize_game,
    witness_permutation,
)
from gamesym.permutation import compose, enumerate_perms, identity


def tiny_game() -> Game:
    return Game.from_table(
        2,
        ("x", "y"),
        {"x,x": (3, 3), "x,y": (0, 5), "y,x": (5, 0), "y,y": (1, 1)},
    )


# --- rationals -------------------------------------------------------------

def test_parse_rational_accepts_ints_fractions_decimals():
    assert parse_rational(7) == Fraction(7)
    assert parse_rational(-3) == Fraction(-3)
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("0.25") == Fraction(1, 4)
    assert parse_rational(" 2 ") == Fraction(2)


@pytest.mark.parametrize("bad", [0.1, 1.0, True, False, None, "abc", "1/0", [1]])
def test_parse_rational_rejects(bad):
    with pytest.raises(GameFormatError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(4)) == 4
    assert format_rational(Fraction(-4, 2)) == -2
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)


# --- container invariants --------------------------------------------------

def test_game_validates_table_shape():
    with pytest.raises(GameFormatError):
        Game(2, ("a", "b"), ((Fraction(0), Fraction(0)),) * 3)
    with pytest.raises(GameFormatError):
        Game(2, ("a", "b"), ((Fraction(0),),) * 4)
    with pytest.raises(GameFormatError):
        Game(2, ("a", "a"), ((Fraction(0), Fraction(0)),) * 4)
    with pytest.raises(GameFormatError):
        Game(2, ("a", "b,c"), ((Fraction(0), Fraction(0)),) * 4)


def test_profile_index_round_trip():
    g = Game.from_table(3, ("a", "b", "c"), {}, default=(0, 0, 0))
    for idx, coords in enumerate(itertools.product(range(3), repeat=3)):
        assert g.index_of(coords) == idx
        assert g.profile(idx) == coords
    assert list(g.profiles()) == list(itertools.product(range(3), repeat=3))


def test_profile_names_round_trip():
    g = tiny_game()
    assert g.profile_names((0, 1)) == "x,y"
    assert g.profile_from_names("x,y") == (0, 1)
    assert g.profile_from_names(" x , y ") == (0, 1)
    with pytest.raises(GameFormatError):
        g.profile_from_names("x")
    with pytest.raises(GameFormatError):
        g.profile_from_names("x,z")


def test_payoff_lookups():
    g = tiny_game()
    assert g.payoff((0, 1)) == (Fraction(0), Fraction(5))
    assert g.payoff_of(1, (0, 1)) == Fraction(5)


def test_from_table_duplicate_and_partial():
    with pytest.raises(GameFormatError):
        Game.from_table(2, ("x", "y"), {"x,y": (0, 0), (0, 1): (1, 1)})
    with pytest.raises(GameFormatError):
        Game.from_table(2, ("x", "y"), {"x,y": (0, 0)})
    with pytest.raises(GameFormatError):
        Game.from_table(2, ("x", "y"), {"x,y": (0, 0)}, default=(0,))
    g = Game.from_table(2, ("x", "y"), {"x,y": (2, 3)}, default=(9, 9))
    assert g.payoff((0, 1)) == (Fraction(2), Fraction(3))
    assert g.payoff((1, 0)) == (Fraction(9), Fraction(9))


# --- the right action ------------------------------------------------------

def test_act_moves_seats():
    # Seat i of the result holds the action of seat sigma[i].
    assert act((10, 20, 30), (2, 0, 1)) == (30, 10, 20)
    assert act((10, 20, 30), identity(3)) == (10, 20, 30)


@given(st.lists(st.integers(0, 2), min_size=4, max_size=4),
       st.permutations(range(4)).map(tuple),
       st.permutations(range(4)).map(tuple))
def test_act_composition_law(profile, sigma, tau):
    profile = tuple(profile)
    assert act(act(profile, sigma), tau) == act(profile, compose(sigma, tau))


def test_commutative_image_counts():
    # Five players over actions (s, r, t): one s, three r, one t.
    g = Game.from_table(5, ("s", "r", "t"), {}, default=(0,) * 5)
    profile = g.profile_from_names("s,r,t,r,r")
    assert commutative_image(profile, 3) == (1, 3, 1)
    assert commutative_image(restrict(profile, [2]), 3) == (1, 3, 0)


def test_witness_permutation():
    a, b = (0, 1, 1, 2), (1, 2, 0, 1)
    sigma = witness_permutation(a, b)
    assert sigma is not None
    assert act(b, sigma) == a
    assert witness_permutation((0, 0), (0, 1)) is None
    assert witness_permutation((0,), (0, 0)) is None


@given(st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.permutations(range(3)).map(tuple))
def test_witness_found_for_any_rearrangement(profile, sigma):
    a = tuple(profile)
    b = act(a, sigma)
    w = witness_permutation(a, b)
    assert w is not None and act(b, w) == a


def test_image_equality_iff_some_permutation_matches():
    for a in itertools.product(range(2), repeat=3):
        for b in itertools.product(range(2), repeat=3):
            same_image = commutative_image(a, 2) == commutative_image(b, 2)
            exists = any(act(b, s) == a for s in enumerate_perms(3))
            assert same_image == exists


def test_restrict_extend_round_trip():
    reduced = restrict((0, 1, 2, 1), [1, 3])
    assert reduced.coords == (0, 2)
    assert reduced.removed == (1, 3)
    assert extend(reduced, {1: 1, 3: 1}) == (0, 1, 2, 1)
    with pytest.raises(ValueError):
        restrict((0, 1), [])
    with pytest.raises(ValueError):
        restrict((0, 1), [5])
    with pytest.raises(ValueError):
        extend(reduced, {1: 1})


# --- file format -----------------------------------------------------------

def test_parse_game_minimal():
    doc = {
        "players": 2,
        "actions": ["x", "y"],
        "payoffs": {"x,x": [1, 1], "x,y": [0, "1/2"], "y,x": ["0.5", 0], "y,y": [2, 2]},
    }
    g = parse_game(json.dumps(doc))
    assert g.n == 2 and g.actions == ("x", "y")
    assert g.payoff_of(1, (0, 1)) == Fraction(1, 2)
    assert g.payoff_of(0, (1, 0)) == Fraction(1, 2)


def test_parse_game_default_and_meta():
    doc = {
        "players": 2,
        "actions": ["x", "y"],
        "default": [7, 7],
        "payoffs": {"x,y": [1, 2]},
        "meta": {"anything": "is ignored"},
    }
    g = parse_game(json.dumps(doc))
    assert g.payoff((1, 1)) == (Fraction(7), Fraction(7))


@pytest.mark.parametrize("doc,fragment", [
    ({"players": 2, "actions": ["x", "y"]}, "payoffs"),
    ({"players": "2", "actions": ["x", "y"], "payoffs": {}}, "players"),
    ({"players": 2, "actions": "xy", "payoffs": {}}, "actions"),
    ({"players": 2, "actions": ["x", "y"], "payoffs": [], "extra": 1}, "unknown"),
    ({"players": 2, "actions": ["x", "y"], "payoffs": []}, "object"),
])
def test_parse_game_structural_errors(doc, fragment):
    with pytest.raises(GameFormatError) as err:
        parse_game(json.dumps(doc))
    assert fragment in str(err.value)


def test_parse_game_rejects_floats_and_constants():
    doc = {"players": 1, "actions": ["x"], "payoffs": {"x": [0.5]}}
    with pytest.raises(GameFormatError):
        parse_game(json.dumps(doc))
    with pytest.raises(GameFormatError):
        parse_game('{"players": 1, "actions": ["x"], "payoffs": {"x": [NaN]}}')


def test_parse_game_rejects_duplicate_profile_keys():
    raw = '{"players": 1, "actions": ["x"], "payoffs": {"x": [1], "x": [2]}}'
    with pytest.raises(GameFormatError):
        parse_game(raw)


def test_parse_game_rejects_bad_json():
    with pytest.raises(GameFormatError):
        parse_game("not json")
    with pytest.raises(GameFormatError):
        parse_game("[1, 2]")


def test_serialize_round_trip():
    g = tiny_game()
    data = serialize_game(g)
    assert parse_game(data) == g
    assert serialize_game(g) == data
    # canonical form: sorted keys, trailing newline
    assert data.endswith(b"\n")
    doc = json.loads(data)
    assert list(doc) == sorted(doc)


def test_serialize_keeps_meta_and_parser_ignores_it():
    g = tiny_game()
    data = serialize_game(g, meta={"seed": 3})
    assert json.loads(data)["meta"] == {"seed": 3}
    assert parse_game(data) == g

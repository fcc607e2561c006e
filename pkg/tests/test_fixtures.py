"""The built-in game catalog and its self-verification."""
from fractions import Fraction

import pytest

from gamesym.fixtures import (
    FIXTURE_NAMES,
    fixture,
    fixture_with_star_fill,
    verify_fixtures,
)
from gamesym.game import parse_game, serialize_game


def test_catalog_names_and_shapes():
    assert FIXTURE_NAMES == (
        "overdet3", "notrans3", "tnotrans4", "exsym4",
        "g4", "gprime4", "gsecond4", "gthird4",
    )
    shapes = {name: (fixture(name).n, fixture(name).s) for name in FIXTURE_NAMES}
    assert shapes == {
        "overdet3": (3, 2),
        "notrans3": (3, 3),
        "tnotrans4": (4, 4),
        "exsym4": (4, 4),
        "g4": (4, 2),
        "gprime4": (4, 2),
        "gsecond4": (4, 2),
        "gthird4": (4, 2),
    }


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("nope")
    with pytest.raises(KeyError):
        fixture_with_star_fill("overdet3", 1)  # has no free payoffs


def test_fixture_returns_fresh_equal_games():
    a, b = fixture("g4"), fixture("g4")
    assert a == b
    assert a.payoff_of(0, a.profile_from_names("a,b,a,b")) == Fraction(3)


def test_spot_check_payoff_tables():
    ov = fixture("overdet3")
    assert ov.payoff(ov.profile_from_names("a,a,a")) == (Fraction(10),) * 3
    assert ov.payoff(ov.profile_from_names("b,a,b")) == (Fraction(-5),) * 3
    nt = fixture("notrans3")
    assert nt.payoff(nt.profile_from_names("c,a,b")) == (Fraction(2), Fraction(3), Fraction(5))
    assert nt.payoff(nt.profile_from_names("a,a,a")) == (Fraction(0),) * 3
    ex = fixture("exsym4")
    nonzero = [(p, vec) for p in ex.profiles() if any((vec := ex.payoff(p)))]
    assert nonzero == [(ex.profile_from_names("a,b,c,d"),
                        (Fraction(0), Fraction(1), Fraction(0), Fraction(0)))]


def test_star_fill_changes_only_free_seats():
    base = fixture("g4")
    filled = fixture_with_star_fill("g4", 7)
    for p in base.profiles():
        assert filled.payoff(p)[:2] == base.payoff(p)[:2]
    assert filled.payoff_of(2, base.profile_from_names("a,b,a,b")) == Fraction(7)
    assert filled.payoff_of(3, base.profile_from_names("a,a,a,b")) == Fraction(7)
    # unnamed profiles stay at the all-zero default
    assert filled.payoff(base.profile_from_names("b,b,b,b")) == (Fraction(0),) * 4


def test_verify_fixtures_all_pass():
    report = verify_fixtures()
    assert report.ok
    assert len(report.assertions) == 28
    assert all(a.passed for a in report.assertions)
    assert {a.source for a in report.assertions} == {"catalog", "computed"}
    computed = [a for a in report.assertions if a.source == "computed"]
    assert any(a.fixture == "gthird4" for a in computed)


def test_fixtures_serialize_round_trip():
    for name in FIXTURE_NAMES:
        g = fixture(name)
        assert parse_game(serialize_game(g)) == g

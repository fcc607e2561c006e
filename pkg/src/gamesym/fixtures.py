"""Catalog of small games that separate the relations from one another.

Each fixture is a hand-written payoff table chosen so that one specific
implication fails while its neighbours hold: blind without transitivity,
twisted without rigidity, simulation without symmetry, and so on.  The
verification report re-derives every cataloged verdict from scratch, so a
regression in any analysis module shows up as a failed assertion here.

Tables list only the interesting profiles; everything else is zero-filled.
Four of the games mark some payoffs as free (stars in the table notation):
those default to zero too, and ``fixture_with_star_fill`` rebuilds them
with any other value to show the cataloged verdicts do not depend on the
filler.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .game import Game
from .permutation import from_cycles, perm_str
from .roles import simulates
from .relations import blind, rigid, twisted, simulates_player
from .symmetry import classify, invariance_group, orbits

Entry = tuple[int, ...]

# (n, actions, listed payoffs, star positions per profile)
_CATALOG: dict[str, tuple[int, str, dict[str, Entry]]] = {
    "overdet3": (3, "ab", {
        "a,a,a": (10, 10, 10),
        "a,b,a": (5, 5, 5),
        "b,a,a": (5, 5, 5),
        "b,b,a": (-5, -5, -5),
        "a,a,b": (5, 5, 5),
        "a,b,b": (-5, -5, -5),
        "b,a,b": (-5, -5, -5),
        "b,b,b": (0, 0, 0),
    }),
    "notrans3": (3, "abc", {
        "a,b,c": (0, 1, 2),
        "a,c,b": (3, 2, 1),
        "b,a,c": (1, 0, 4),
        "b,c,a": (5, 4, 0),
        "c,a,b": (2, 3, 5),
        "c,b,a": (4, 5, 3),
    }),
    "tnotrans4": (4, "abcd", {
        "a,b,c,d": (1, 2, 3, 0),
        "a,c,b,d": (4, 3, 2, 0),
        "c,a,b,d": (3, 4, 5, 0),
        "c,b,a,d": (6, 5, 4, 0),
        "b,c,a,d": (5, 6, 1, 0),
        "b,a,c,d": (2, 1, 6, 0),
    }),
    "exsym4": (4, "abcd", {
        "a,b,c,d": (0, 1, 0, 0),
    }),
    "g4": (4, "ab", {
        "a,a,a,b": (1, 2, 0, 0),
        "a,a,b,a": (2, 1, 0, 0),
        "a,b,a,b": (3, 4, 0, 0),
        "b,a,a,b": (4, 3, 0, 0),
    }),
    "gprime4": (4, "ab", {
        "a,b,a,b": (1, 2, 0, 0),
        "a,b,b,a": (3, 4, 0, 0),
        "b,a,a,b": (4, 3, 0, 0),
        "b,a,b,a": (2, 1, 0, 0),
    }),
    "gsecond4": (4, "ab", {
        "a,b,a,b": (1, 2, 0, 0),
        "a,b,b,a": (3, 4, 0, 0),
        "b,a,a,b": (2, 1, 0, 0),
        "b,a,b,a": (4, 3, 0, 0),
    }),
    "gthird4": (4, "ab", {
        "a,b,a,b": (1, 2, 0, 0),
        "a,b,b,a": (1, 2, 0, 0),
        "b,a,a,b": (2, 1, 0, 0),
        "b,a,b,a": (2, 1, 0, 0),
    }),
}

FIXTURE_NAMES = tuple(_CATALOG)

# In the starred games only the first two players' payoffs are pinned by the
# table; seats 3 and 4 of the listed profiles are free.
_STARRED = ("g4", "gprime4", "gsecond4", "gthird4")


def fixture(name: str) -> Game:
    """Build one cataloged game; unknown names raise ``KeyError``."""
    if name not in _CATALOG:
        raise KeyError(f"unknown fixture {name!r}, expected one of {FIXTURE_NAMES}")
    n, actions, table = _CATALOG[name]
    return Game.from_table(n, tuple(actions), table, default=(0,) * n)


def fixture_with_star_fill(name: str, fill: int | Fraction) -> Game:
    """Rebuild a starred game with the free payoffs set to ``fill``."""
    if name not in _STARRED:
        raise KeyError(f"fixture {name!r} has no free payoffs")
    n, actions, table = _CATALOG[name]
    filled = {
        profile: row[:2] + (fill, fill)
        for profile, row in table.items()
    }
    return Game.from_table(n, tuple(actions), filled, default=(0,) * n)


@dataclass(frozen=True)
class FixtureAssertion:
    fixture: str
    description: str
    passed: bool
    source: str       # "catalog" for verdicts the tables were built to show,
                      # "computed" where the catalog leaves the outcome open
    detail: str = ""


@dataclass(frozen=True)
class FixtureReport:
    assertions: tuple[FixtureAssertion, ...]

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.assertions)


def _cycles(n: int, *cycle_lists) -> tuple[int, ...]:
    """Cycles written with 1-based seats, as the tables are."""
    return from_cycles(n, [[x - 1 for x in c] for c in cycle_lists])


def verify_fixtures() -> FixtureReport:
    """Re-derive every cataloged verdict and report each as pass or fail."""
    out: list[FixtureAssertion] = []

    def add(fx: str, description: str, passed: bool, source: str = "catalog", detail: str = "") -> None:
        out.append(FixtureAssertion(fx, description, bool(passed), source, detail))

    g = fixture("overdet3")
    cls = classify(g, certificates=False)
    add("overdet3", "all five classifications hold", all(cls.as_dict().values()))
    add("overdet3", "every seat permutation preserves payoffs", len(invariance_group(g)) == 6)
    expected_orbits = (
        ("a,a,a",),
        ("a,a,b", "a,b,a", "b,a,a"),
        ("a,b,b", "b,a,b", "b,b,a"),
        ("b,b,b",),
    )
    got = tuple(
        tuple(sorted(g.profile_names(p) for p in cls_profiles))
        for cls_profiles in orbits(g).classes
    )
    add("overdet3", "orbits are the four listed profile sets", got == expected_orbits)

    g = fixture("notrans3")
    add("notrans3", "players 1 and 2 blindly related", blind(g, 0, 1, certificate=False).holds)
    add("notrans3", "players 2 and 3 blindly related", blind(g, 1, 2, certificate=False).holds)
    add("notrans3", "players 1 and 3 not blindly related", not blind(g, 0, 2, certificate=False).holds)
    add("notrans3", "player 1 not blindly related to itself", not blind(g, 0, 0, certificate=False).holds)
    add("notrans3", "players 1 and 2 rigidly related", rigid(g, 0, 1, certificate=False).holds)
    add("notrans3", "players 2 and 3 rigidly related", rigid(g, 1, 2, certificate=False).holds)
    add("notrans3", "players 1 and 3 not rigidly related", not rigid(g, 0, 2, certificate=False).holds)

    g = fixture("tnotrans4")
    add("tnotrans4", "players 1 and 2 twistedly related", twisted(g, 0, 1, certificate=False).holds)
    add("tnotrans4", "players 2 and 3 twistedly related", twisted(g, 1, 2, certificate=False).holds)
    res = twisted(g, 0, 2)
    add("tnotrans4", "players 1 and 3 not twistedly related", not res.holds)
    failing = tuple(sorted(perm_str(s) for s in (res.failures or {})))
    add("tnotrans4", "exactly the two exchange candidates fail for the pair (1, 3)",
        failing == ("(1 3)", "(1 3)(2 4)"), detail=f"candidates {failing}")

    g = fixture("exsym4")
    add("exsym4", "role of 1 toward 2 simulates role of 2 toward 1",
        simulates(g, (0, 1), (1, 0), certificate=False).holds)
    rev = simulates(g, (1, 0), (0, 1))
    add("exsym4", "reverse simulation fails", not rev.holds)
    add("exsym4", "reverse simulation breaks first at profile (a, b, c, d)",
        rev.counterexample is not None and g.profile_names(rev.counterexample.profile) == "a,b,c,d")
    nonzero = [(p, i) for p in g.profiles() for i in range(4) if g.payoff_of(i, p) != 0]
    add("exsym4", "single nonzero payoff sits at player 2, profile (a, b, c, d)",
        nonzero == [(g.profile_from_names("a,b,c,d"), 1)])

    g = fixture("g4")
    res = simulates_player(g, 0, 1)
    add("g4", "player 1 simulates player 2", res.holds)
    wit = res.witness or {}
    p_abab = g.profile_from_names("a,b,a,b")
    p_aaab = g.profile_from_names("a,a,a,b")
    add("g4", "profile (a,b,a,b) matched through the bare exchange",
        wit.get(p_abab) == _cycles(4, [1, 2]), detail=perm_str(wit.get(p_abab, ())))
    add("g4", "profile (a,a,a,b) matched through the double exchange",
        wit.get(p_aaab) == _cycles(4, [1, 2], [3, 4]), detail=perm_str(wit.get(p_aaab, ())))
    add("g4", "players 1 and 2 not twistedly related", not twisted(g, 0, 1, certificate=False).holds)

    g = fixture("gprime4")
    res = twisted(g, 0, 1)
    add("gprime4", "players 1 and 2 twistedly related", res.holds)
    add("gprime4", "the witness is the double exchange", res.witness == _cycles(4, [1, 2], [3, 4]),
        detail=perm_str(res.witness or ()))
    add("gprime4", "players 1 and 2 not rigidly related", not rigid(g, 0, 1, certificate=False).holds)

    g = fixture("gsecond4")
    add("gsecond4", "players 1 and 2 rigidly related", rigid(g, 0, 1, certificate=False).holds)
    add("gsecond4", "players 1 and 2 not blindly related", not blind(g, 0, 1, certificate=False).holds)

    g = fixture("gthird4")
    add("gthird4", "players 1 and 2 blindly related under the zero fill",
        blind(g, 0, 1, certificate=False).holds, source="computed",
        detail="outcome depends on the zero fill of the free payoffs")

    return FixtureReport(tuple(out))

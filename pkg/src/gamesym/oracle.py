"""Plain-definition reference implementations and seeded game generators.

Every ``naive_*`` function recomputes a verdict straight from the defining
quantifier form: nested loops over profiles and permutations, exact
:class:`~fractions.Fraction` comparisons, no integer recoding, no pruning.
The fast paths elsewhere are trusted only because they agree with these
twins on every differential run, so nothing here may import from the
optimized modules.

Generated games come from a seeded Mersenne Twister with a fixed draw
order, making a (mode, n, s, seed, lo, hi) tuple name one reproducible
game forever.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .game import Game, Profile

MAX_PLAYERS = 7
MAX_ACTIONS = 4


class SizeGuardError(ValueError):
    """Raised when an exhaustive scan would leave desk scale."""


def _guard(n: int, s: int) -> None:
    if not 2 <= n <= MAX_PLAYERS:
        raise SizeGuardError(f"player count {n} outside 2..{MAX_PLAYERS}")
    if not 2 <= s <= MAX_ACTIONS:
        raise SizeGuardError(f"action count {s} outside 2..{MAX_ACTIONS}")


def _act(a: Profile, sigma: tuple[int, ...]) -> Profile:
    return tuple(a[sigma[x]] for x in range(len(a)))


def _perms(n: int):
    return itertools.permutations(range(n))


def _pinned(n: int, pins: dict[int, int]):
    for sigma in _perms(n):
        if all(sigma[pos] == val for pos, val in pins.items()):
            yield sigma


def _image(a: Profile, s: int) -> tuple[int, ...]:
    return tuple(sum(1 for x in a if x == c) for c in range(s))


def _image_without(a: Profile, i: int, s: int) -> tuple[int, ...]:
    img = list(_image(a, s))
    img[a[i]] -= 1
    return tuple(img)


def naive_is_invariant(g: Game, sigma: tuple[int, ...]) -> bool:
    _guard(g.n, g.s)
    for a in g.profiles():
        for i in range(g.n):
            if g.payoff_of(sigma[i], a) != g.payoff_of(i, _act(a, sigma)):
                return False
    return True


def naive_invariance_group(g: Game) -> list[tuple[int, ...]]:
    return [sigma for sigma in _perms(g.n) if naive_is_invariant(g, sigma)]


def naive_anonymous(g: Game) -> bool:
    _guard(g.n, g.s)
    for i in range(g.n):
        for a in g.profiles():
            for b in g.profiles():
                if a[i] == b[i] and _image_without(a, i, g.s) == _image_without(b, i, g.s):
                    if g.payoff_of(i, a) != g.payoff_of(i, b):
                        return False
    return True


def naive_symmetric(g: Game) -> bool:
    _guard(g.n, g.s)
    for i in range(g.n):
        for j in range(g.n):
            for a in g.profiles():
                for b in g.profiles():
                    if a[i] == b[j] and _image_without(a, i, g.s) == _image_without(b, j, g.s):
                        if g.payoff_of(i, a) != g.payoff_of(j, b):
                            return False
    return True


def naive_self_anonymous(g: Game) -> bool:
    _guard(g.n, g.s)
    for i in range(g.n):
        for a in g.profiles():
            for b in g.profiles():
                if _image(a, g.s) == _image(b, g.s) and g.payoff_of(i, a) != g.payoff_of(i, b):
                    return False
    return True


def naive_self_symmetric(g: Game) -> bool:
    _guard(g.n, g.s)
    for i in range(g.n):
        for j in range(g.n):
            for a in g.profiles():
                for b in g.profiles():
                    if _image(a, g.s) == _image(b, g.s) and g.payoff_of(i, a) != g.payoff_of(j, b):
                        return False
    return True


def naive_dm_symmetric(g: Game) -> bool:
    _guard(g.n, g.s)
    for sigma in _perms(g.n):
        for a in g.profiles():
            for i in range(g.n):
                if g.payoff_of(i, a) != g.payoff_of(sigma[i], _act(a, sigma)):
                    return False
    return True


def naive_classification(g: Game) -> dict[str, bool]:
    return {
        "anonymous": naive_anonymous(g),
        "symmetric": naive_symmetric(g),
        "self_anonymous": naive_self_anonymous(g),
        "self_symmetric": naive_self_symmetric(g),
        "dm_symmetric": naive_dm_symmetric(g),
    }


def _role_pins(left: tuple[int, int], right: tuple[int, int]) -> dict[int, int]:
    (i, j), (k, l) = left, right
    if (i == j) != (k == l):
        raise ValueError("cannot relate a diagonal role to an off-diagonal role")
    if i == j:
        return {k: i}
    return {k: i, l: j}


def naive_role_related(g: Game, flavor: str, left: tuple[int, int], right: tuple[int, int]) -> bool:
    """Flavor B: every pinned permutation transports payoffs; T: some single
    one; M: one per profile."""
    _guard(g.n, g.s)
    pins = _role_pins(left, right)
    i, k = left[0], right[0]
    if flavor == "B":
        return all(
            g.payoff_of(i, a) == g.payoff_of(k, _act(a, sigma))
            for sigma in _pinned(g.n, pins)
            for a in g.profiles()
        )
    if flavor == "T":
        return any(
            all(g.payoff_of(i, a) == g.payoff_of(k, _act(a, sigma)) for a in g.profiles())
            for sigma in _pinned(g.n, pins)
        )
    if flavor == "M":
        return all(
            any(g.payoff_of(i, a) == g.payoff_of(k, _act(a, sigma)) for sigma in _pinned(g.n, pins))
            for a in g.profiles()
        )
    raise ValueError(f"unknown relation flavor {flavor!r}")


def naive_blind_related(g: Game, left: tuple[int, int], right: tuple[int, int]) -> bool:
    return naive_role_related(g, "B", left, right)


def naive_twisted_related(g: Game, left: tuple[int, int], right: tuple[int, int]) -> bool:
    return naive_role_related(g, "T", left, right)


def naive_simulates(g: Game, left: tuple[int, int], right: tuple[int, int]) -> bool:
    return naive_role_related(g, "M", left, right)


def naive_blind(g: Game, i: int, j: int) -> bool:
    return naive_role_related(g, "B", (i, j), (j, i))


def naive_rigid(g: Game, i: int, j: int) -> bool:
    _guard(g.n, g.s)
    if i == j:
        return True
    swap = list(range(g.n))
    swap[i], swap[j] = j, i
    return all(g.payoff_of(i, a) == g.payoff_of(j, _act(a, tuple(swap))) for a in g.profiles())


def naive_twisted(g: Game, i: int, j: int) -> bool:
    return naive_role_related(g, "T", (i, j), (j, i))


def naive_simulates_player(g: Game, i: int, j: int) -> bool:
    return naive_role_related(g, "M", (i, j), (j, i))


def naive_p_relation(g: Game, i: int, j: int) -> bool:
    """Some permutation sending ``j`` to ``i`` transports ``j``'s payoffs
    onto ``i``'s at every profile."""
    _guard(g.n, g.s)
    return any(
        all(g.payoff_of(i, a) == g.payoff_of(j, _act(a, sigma)) for a in g.profiles())
        for sigma in _pinned(g.n, {j: i})
    )


def naive_q_relation(g: Game, i: int, j: int, flavor: str = "B") -> bool:
    """Diagonal roles related, plus some related role of ``j`` per role of ``i``."""
    _guard(g.n, g.s)
    if not naive_role_related(g, flavor, (i, i), (j, j)):
        return False
    for k in range(g.n):
        if k == i:
            continue
        if not any(
            naive_role_related(g, flavor, (i, k), (j, l))
            for l in range(g.n)
            if l != j
        ):
            return False
    return True


def naive_p_characterization(g: Game, i: int, j: int) -> bool:
    """Single-quantifier form: some ``sigma`` with ``sigma[j] == i`` and
    payoff transport everywhere."""
    return naive_p_relation(g, i, j)


def naive_q_characterization(g: Game, i: int, j: int) -> bool:
    """Single-quantifier form: every ``sigma`` with ``sigma[j] == i``
    transports payoffs everywhere."""
    _guard(g.n, g.s)
    return all(
        g.payoff_of(i, a) == g.payoff_of(j, _act(a, sigma))
        for sigma in _pinned(g.n, {j: i})
        for a in g.profiles()
    )


_ACTION_NAMES = ("a", "b", "c", "d")

MODES = ("general", "anonymous", "self_symmetric")


@dataclass(frozen=True)
class GeneratorConfig:
    """Everything that determines one generated game."""

    n: int
    s: int
    seed: int
    lo: int = -9
    hi: int = 9
    mode: str = "general"

    def __post_init__(self) -> None:
        _guard(self.n, self.s)
        if self.mode not in MODES:
            raise SizeGuardError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.lo > self.hi:
            raise SizeGuardError(f"empty payoff range [{self.lo}, {self.hi}]")

    def describe(self) -> dict[str, object]:
        """Reproduction recipe, embedded in emitted game files."""
        draws = {
            "general": "one randrange(lo, hi+1) per (profile, player); profiles in "
                       "table order, players first to last within a profile",
            "anonymous": "one randrange(lo, hi+1) per (player, own action, occupancy "
                         "vector of the others); occupancy vectors in descending-first order",
            "self_symmetric": "one randrange(lo, hi+1) per occupancy vector of the full "
                              "profile, in descending-first order",
        }
        return {
            "generator": "gamesym",
            "mode": self.mode,
            "players": self.n,
            "actions": self.s,
            "seed": self.seed,
            "lo": self.lo,
            "hi": self.hi,
            "rng": "python random.Random(seed), Mersenne Twister",
            "draws": draws[self.mode],
        }


def generate(config: GeneratorConfig) -> Game:
    """Build the game named by ``config``, deterministically.

    general         independent payoff per table cell
    anonymous       payoffs drawn per (player, own action, others' counts),
                    then spread over the full table
    self_symmetric  one payoff per occupancy vector, shared by all players
    """
    from .symmetry import enumerate_partitions

    rng = random.Random(config.seed)
    n, s = config.n, config.s
    actions = _ACTION_NAMES[:s]

    def draw() -> Fraction:
        return Fraction(rng.randrange(config.lo, config.hi + 1))

    rows: list[tuple[Fraction, ...]]
    if config.mode == "general":
        rows = [
            tuple(draw() for _ in range(n))
            for _ in itertools.product(range(s), repeat=n)
        ]
    elif config.mode == "anonymous":
        utilities = [
            [{counts: draw() for counts in enumerate_partitions(n - 1, s)} for _ in range(s)]
            for _ in range(n)
        ]
        rows = [
            tuple(utilities[i][a[i]][_image_without(a, i, s)] for i in range(n))
            for a in itertools.product(range(s), repeat=n)
        ]
    else:
        shared = {counts: draw() for counts in enumerate_partitions(n, s)}
        rows = [
            (shared[_image(a, s)],) * n
            for a in itertools.product(range(s), repeat=n)
        ]
    return Game(n, actions, tuple(rows))

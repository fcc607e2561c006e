"""Dense integer views of a game, shared by every optimized scan.

Payoffs are ranked into integer codes once per game: equal fractions get
equal codes, distinct fractions distinct codes, so the kernels only ever
compare int64s.  Permuted-profile index tables are built on demand and
cached per permutation.
"""
from __future__ import annotations

import weakref

import numpy as np

from . import kernels
from .game import Game
from .permutation import Perm


class GameTables:
    def __init__(self, game: Game) -> None:
        n, s, size = game.n, game.s, game.size
        self.weights = (s ** np.arange(n - 1, -1, -1)).astype(np.int64)
        self.digits = ((np.arange(size, dtype=np.int64)[:, None] // self.weights[None, :]) % s).astype(np.int64)

        values = sorted({x for row in game.payoffs for x in row})
        rank = {x: c for c, x in enumerate(values)}
        self.code_values: tuple = tuple(values)
        self.codes = np.array(
            [[rank[x] for x in row] for row in game.payoffs], dtype=np.int64
        ).reshape(size, n)

        self._ptabs: dict[Perm, np.ndarray] = {}
        self._multiset_keys: dict[int, bytes] = {}

    def perm_table(self, sigma: Perm) -> np.ndarray:
        """Index table of the right action: entry ``p`` is ``index_of(act(profile(p), sigma))``."""
        tab = self._ptabs.get(sigma)
        if tab is None:
            tab = kernels.perm_profile_table(self.digits, self.weights, np.array(sigma, dtype=np.int64))
            self._ptabs[sigma] = tab
        return tab

    def perm_tables(self, perms: list[Perm]) -> np.ndarray:
        """Stacked index tables for a list of permutations, shape ``(len(perms), size)``."""
        return np.stack([self.perm_table(p) for p in perms])

    def multiset_key(self, player: int) -> bytes:
        """Fingerprint of the multiset of player's payoffs over all profiles.

        Acting by a permutation rearranges profiles, so two players can only
        be blindly or twistedly related when these fingerprints agree.
        """
        key = self._multiset_keys.get(player)
        if key is None:
            key = np.sort(self.codes[:, player]).tobytes()
            self._multiset_keys[player] = key
        return key


_CACHE: dict[int, GameTables] = {}


def tables(game: Game) -> GameTables:
    """Per-game singleton of :class:`GameTables`.

    Keyed by object identity, not value, so the cache never hashes the
    payoff table; entries are dropped when the game is collected.
    """
    key = id(game)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    built = GameTables(game)
    _CACHE[key] = built
    weakref.finalize(game, _CACHE.pop, key, None)
    return built

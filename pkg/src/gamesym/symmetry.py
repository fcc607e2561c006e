"""Whole-game symmetry analysis.

Five nested classification predicates are computed here, together with the
group of payoff-preserving seat permutations, the partition of profiles into
reordering classes, and the compressed per-count representation that exists
exactly for anonymous games.

Verdicts come from grouped single-pass scans over the integer code table;
every failed predicate is backed by the first counterexample under the
defining quantifier order, so reports are reproducible run to run.  The
plain-definition twins in :mod:`gamesym.oracle` recompute all verdicts
independently.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from . import kernels
from .engine import tables
from .game import Game, Profile, act, commutative_image
from .permutation import Perm, enumerate_perms, identity, inverse, compose


@dataclass(frozen=True)
class InvarianceCounterexample:
    profile: Profile
    player: int
    payoff_moved: Fraction    # payoff of seat sigma[player] at profile
    payoff_acted: Fraction    # payoff of seat player at act(profile, sigma)


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    counterexample: InvarianceCounterexample | None


@dataclass(frozen=True)
class ProfilePairCounterexample:
    player_a: int
    player_b: int
    profile_a: Profile
    profile_b: Profile
    payoff_a: Fraction
    payoff_b: Fraction


@dataclass(frozen=True)
class PermutationCounterexample:
    sigma: Perm
    profile: Profile
    player: int
    payoff_a: Fraction
    payoff_b: Fraction


@dataclass(frozen=True)
class Classification:
    anonymous: bool
    symmetric: bool
    self_anonymous: bool
    self_symmetric: bool
    dm_symmetric: bool
    counterexamples: Mapping[str, object]

    def as_dict(self) -> dict[str, bool]:
        return {
            "anonymous": self.anonymous,
            "symmetric": self.symmetric,
            "self_anonymous": self.self_anonymous,
            "self_symmetric": self.self_symmetric,
            "dm_symmetric": self.dm_symmetric,
        }


def is_invariant(g: Game, sigma: Perm) -> InvarianceResult:
    """Does ``sigma`` preserve payoffs, seat ``sigma[i]`` before matching seat ``i`` after?

    Holds when for every profile ``a`` and player ``i`` the payoff of player
    ``sigma[i]`` at ``a`` equals the payoff of player ``i`` at ``act(a, sigma)``.
    """
    t = tables(g)
    p, i = kernels.first_invariance_violation(t.codes, t.perm_table(sigma), np.array(sigma, dtype=np.int64))
    if p < 0:
        return InvarianceResult(True, None)
    prof = g.profile(p)
    return InvarianceResult(
        False,
        InvarianceCounterexample(prof, i, g.payoff_of(sigma[i], prof), g.payoff_of(i, act(prof, sigma))),
    )


def invariance_group(g: Game) -> tuple[Perm, ...]:
    """All payoff-preserving permutations, in lexicographic order.

    The result is re-checked to contain the identity and to close under
    composition and inverses; a failure there is a bug, not a game property.
    """
    members = tuple(sigma for sigma in enumerate_perms(g.n) if is_invariant(g, sigma).invariant)
    index = set(members)
    if identity(g.n) not in index:
        raise RuntimeError("invariance set lost the identity")
    for sigma in members:
        if inverse(sigma) not in index:
            raise RuntimeError(f"invariance set not closed under inverse at {sigma}")
        for tau in members:
            if compose(sigma, tau) not in index:
                raise RuntimeError(f"invariance set not closed under composition at {sigma}, {tau}")
    return members


@dataclass(frozen=True)
class OrbitPartition:
    """Profiles grouped by equal occupancy counts.

    Classes are ordered by their smallest profile index, profiles inside a
    class by index.
    """

    classes: tuple[tuple[Profile, ...], ...]
    images: tuple[tuple[int, ...], ...]
    index: Mapping[Profile, int]


def orbits(g: Game) -> OrbitPartition:
    by_image: dict[tuple[int, ...], list[Profile]] = {}
    for a in g.profiles():
        by_image.setdefault(commutative_image(a, g.s), []).append(a)
    groups = sorted(by_image.items(), key=lambda kv: g.index_of(kv[1][0]))
    classes = tuple(tuple(profiles) for _, profiles in groups)
    images = tuple(img for img, _ in groups)
    index = {a: c for c, cls in enumerate(classes) for a in cls}
    return OrbitPartition(classes, images, index)


def _count_matrix(t, s: int) -> np.ndarray:
    """Occupancy counts per profile, shape (size, s)."""
    size, n = t.digits.shape
    counts = np.zeros((size, s), dtype=np.int64)
    rows = np.arange(size)
    for i in range(n):
        counts[rows, t.digits[:, i]] += 1
    return counts


def _reduced_keys(g: Game, player: int) -> list[tuple[int, bytes]]:
    """Per profile: (own action, occupancy fingerprint of the remaining seats)."""
    t = tables(g)
    counts = _count_matrix(t, g.s).copy()
    own = t.digits[:, player]
    counts[np.arange(g.size), own] -= 1
    return [(int(own[p]), counts[p].tobytes()) for p in range(g.size)]


def _full_image_keys(g: Game) -> list[bytes]:
    counts = _count_matrix(tables(g), g.s)
    return [counts[p].tobytes() for p in range(g.size)]


def _first_pair_conflict(g: Game, keys_a: list, vals_a: np.ndarray, keys_b: list, vals_b: np.ndarray):
    """Lexicographically first (a, b) with equal keys and unequal values.

    Matches a literal nested scan over profile pairs: the smallest conflicting
    ``a`` always heads its key group, so grouping loses nothing.
    """
    groups: dict[object, list[int]] = {}
    for p, key in enumerate(keys_b):
        groups.setdefault(key, []).append(p)
    best: tuple[int, int] | None = None
    for a_idx, key in enumerate(keys_a):
        if best is not None and a_idx >= best[0]:
            break
        for b_idx in groups.get(key, ()):
            if vals_b[b_idx] != vals_a[a_idx]:
                if best is None or (a_idx, b_idx) < best:
                    best = (a_idx, b_idx)
                break
    return best


def _classify_pairwise(g: Game, keys_per_player: list, certificates: bool, same_player_only: bool):
    """Shared engine for the four profile-pair predicates.

    Returns (verdict, counterexample | None).  The quantifier order is
    player(s) outermost, then both profiles in index order.
    """
    t = tables(g)
    codes = t.codes
    players = (
        [(i, i) for i in range(g.n)]
        if same_player_only
        else [(i, j) for i in range(g.n) for j in range(g.n)]
    )
    # Verdict first.  The predicate just says "payoff is a function of the
    # key", per player or jointly, so one dict pass settles it.
    ok = True
    if same_player_only:
        for i in range(g.n):
            seen: dict[object, int] = {}
            for key, code in zip(keys_per_player[i], codes[:, i]):
                if seen.setdefault(key, int(code)) != code:
                    ok = False
                    break
            if not ok:
                break
    else:
        joint: dict[object, int] = {}
        for i in range(g.n):
            for key, code in zip(keys_per_player[i], codes[:, i]):
                if joint.setdefault(key, int(code)) != code:
                    ok = False
                    break
            if not ok:
                break
    if ok:
        return True, None
    if not certificates:
        return False, None
    for i, j in players:
        hit = _first_pair_conflict(g, keys_per_player[i], codes[:, i], keys_per_player[j], codes[:, j])
        if hit is not None:
            a_idx, b_idx = hit
            pa, pb = g.profile(a_idx), g.profile(b_idx)
            return False, ProfilePairCounterexample(i, j, pa, pb, g.payoff_of(i, pa), g.payoff_of(j, pb))
    raise RuntimeError("verdict and certificate scans disagree")


def _dm_check(g: Game, certificates: bool):
    t = tables(g)
    for sigma in enumerate_perms(g.n):
        p, i = kernels.first_dm_violation(t.codes, t.perm_table(sigma), np.array(sigma, dtype=np.int64))
        if p >= 0:
            if not certificates:
                return False, None
            prof = g.profile(p)
            return False, PermutationCounterexample(
                sigma, prof, i, g.payoff_of(i, prof), g.payoff_of(sigma[i], act(prof, sigma))
            )
    return True, None


def classify(g: Game, certificates: bool = True) -> Classification:
    """Evaluate the five symmetry predicates.

    anonymous        payoff depends only on own action and others' counts
    symmetric        one shared payoff function of own action and others' counts
    self_anonymous   payoff depends only on everyone's counts
    self_symmetric   one shared payoff function of everyone's counts
    dm_symmetric     every seat permutation carries payoffs along with seats

    When ``certificates`` is set, each failed predicate is reported with the
    first counterexample under its defining quantifier order.
    """
    reduced = [_reduced_keys(g, i) for i in range(g.n)]
    full = _full_image_keys(g)
    full_per_player = [full] * g.n

    anon, anon_ce = _classify_pairwise(g, reduced, certificates, same_player_only=True)
    sym, sym_ce = _classify_pairwise(g, reduced, certificates, same_player_only=False)
    self_anon, self_anon_ce = _classify_pairwise(g, full_per_player, certificates, same_player_only=True)
    self_sym, self_sym_ce = _classify_pairwise(g, full_per_player, certificates, same_player_only=False)
    dm, dm_ce = _dm_check(g, certificates)

    ces: dict[str, object] = {}
    for name, ce in (
        ("anonymous", anon_ce),
        ("symmetric", sym_ce),
        ("self_anonymous", self_anon_ce),
        ("self_symmetric", self_sym_ce),
        ("dm_symmetric", dm_ce),
    ):
        if ce is not None:
            ces[name] = ce
    return Classification(anon, sym, self_anon, self_sym, dm, ces)


def enumerate_partitions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All ways to split ``total`` over ``parts`` ordered slots.

    Ordered descending on the first coordinate, then recursively; so the
    list starts ``(total, 0, ...)`` and ends ``(0, ..., total)``.
    """
    if parts < 1:
        raise ValueError("need at least one part")
    if total < 0:
        raise ValueError("total must be non-negative")
    if parts == 1:
        return [(total,)]
    out: list[tuple[int, ...]] = []
    for first in range(total, -1, -1):
        for rest in enumerate_partitions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class AnonymousGame:
    """Compressed form of an anonymous game.

    ``utilities[i][x]`` maps the occupancy counts of the other players to
    player ``i``'s payoff for playing action ``x`` against those counts.
    """

    n: int
    actions: tuple[str, ...]
    utilities: tuple[tuple[Mapping[tuple[int, ...], Fraction], ...], ...]

    def payoff_of(self, player: int, profile: Profile) -> Fraction:
        from .game import restrict

        others = commutative_image(restrict(profile, [player]), len(self.actions))
        return self.utilities[player][profile[player]][others]

    def to_game(self) -> Game:
        rows = tuple(
            tuple(self.payoff_of(i, a) for i in range(self.n))
            for a in itertools.product(range(len(self.actions)), repeat=self.n)
        )
        return Game(self.n, self.actions, rows)


@dataclass(frozen=True)
class RepresentationConflict:
    """Two profiles an anonymous table cannot tell apart, with unequal payoffs."""

    player: int
    profile_a: Profile
    profile_b: Profile
    payoff_a: Fraction
    payoff_b: Fraction


def anonymous_representation(g: Game) -> AnonymousGame | RepresentationConflict:
    """Compress ``g`` to per-count utilities, or report why that is impossible.

    Succeeds exactly when ``classify(g).anonymous`` holds; the conflict
    report carries the first offending profile pair.
    """
    from .game import restrict

    t = tables(g)
    utilities: list[tuple[dict, ...]] = []
    for i in range(g.n):
        keys = _reduced_keys(g, i)
        firsts: dict[object, int] = {}
        for p, key in enumerate(keys):
            prev = firsts.setdefault(key, p)
            if t.codes[prev, i] != t.codes[p, i]:
                hit = _first_pair_conflict(g, keys, t.codes[:, i], keys, t.codes[:, i])
                assert hit is not None
                a_idx, b_idx = hit
                pa, pb = g.profile(a_idx), g.profile(b_idx)
                return RepresentationConflict(i, pa, pb, g.payoff_of(i, pa), g.payoff_of(i, pb))
        per_action: tuple[dict, ...] = tuple({} for _ in range(g.s))
        for a in g.profiles():
            counts = commutative_image(restrict(a, [i]), g.s)
            per_action[a[i]][counts] = g.payoff_of(i, a)
        utilities.append(per_action)
    return AnonymousGame(g.n, g.actions, tuple(utilities))

"""Per-player roles and the three ways two roles can match.

The role of player ``i`` toward player ``j`` tabulates ``i``'s payoff as a
function of the pair ``(a_i, a_j)`` for every configuration of the remaining
seats; the diagonal role of ``i`` toward itself tabulates payoff against own
action alone.  Two roles are compared by transporting profiles with seat
permutations that pin the owners (and counterparts) onto each other:

blind    every pinned permutation transports payoffs
twisted  some single pinned permutation transports payoffs
simulate every profile has its own pinned permutation

Pinning for ``(i, j)`` against ``(k, l)`` requires ``sigma[k] == i`` and
``sigma[l] == j``; a diagonal pair only requires ``sigma[k] == i``.
Candidate permutations are always tried in lexicographic order, which makes
witnesses and counterexamples reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .engine import GameTables, tables
from .game import Game, Profile, act, restrict
from .permutation import Perm, enumerate_constrained

RolePair = tuple[int, int]


class MixedArityError(ValueError):
    """Comparing a diagonal role against a two-player role is not a query."""


@dataclass(frozen=True)
class Role:
    """Payoff table of ``owner`` keyed by the remaining seats' actions.

    For ``owner != counterpart`` each entry is an ``s * s`` matrix indexed by
    ``(a_owner, a_counterpart)``; the diagonal role keeps vectors indexed by
    ``a_owner`` alone.
    """

    owner: int
    counterpart: int
    table: Mapping[tuple[int, ...], tuple]


@dataclass(frozen=True)
class RoleCounterexample:
    profile: Profile
    sigma: Perm
    payoff_left: Fraction   # owner's payoff at profile
    payoff_right: Fraction  # other owner's payoff at act(profile, sigma)


@dataclass(frozen=True)
class RoleRelationResult:
    holds: bool
    witness: Perm | Mapping[Profile, Perm] | None
    counterexample: RoleCounterexample | None
    failures: Mapping[Perm, RoleCounterexample] | None


def _check_player(g: Game, x: int) -> None:
    if not 0 <= x < g.n:
        raise ValueError(f"player {x} out of range for {g.n} players")


def role_pins(left: RolePair, right: RolePair) -> dict[int, int]:
    """Pin map for transporting ``right``'s roles onto ``left``'s."""
    (i, j), (k, l) = left, right
    if (i == j) != (k == l):
        raise MixedArityError(f"cannot relate diagonal and non-diagonal roles: {left} vs {right}")
    if i == j:
        return {k: i}
    return {k: i, l: j}


def pinned_perms(n: int, left: RolePair, right: RolePair) -> list[Perm]:
    """Candidate permutations for a role comparison, lexicographic order."""
    return list(enumerate_constrained(n, role_pins(left, right)))


def extract_role(g: Game, owner: int, counterpart: int) -> Role:
    """Materialize one role table from the payoff table."""
    _check_player(g, owner)
    _check_player(g, counterpart)
    table: dict[tuple[int, ...], tuple] = {}
    if owner == counterpart:
        for reduced_key in _reduced_space(g, (owner,)):
            vec = []
            for x in range(g.s):
                profile = _insert(g, reduced_key, {owner: x})
                vec.append(g.payoff_of(owner, profile))
            table[reduced_key] = tuple(vec)
    else:
        for reduced_key in _reduced_space(g, (owner, counterpart)):
            mat = []
            for x in range(g.s):
                row = []
                for y in range(g.s):
                    profile = _insert(g, reduced_key, {owner: x, counterpart: y})
                    row.append(g.payoff_of(owner, profile))
                mat.append(tuple(row))
            table[reduced_key] = tuple(mat)
    return Role(owner, counterpart, table)


def _reduced_space(g: Game, removed: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    import itertools

    return itertools.product(range(g.s), repeat=g.n - len(removed))


def _insert(g: Game, reduced_coords: tuple[int, ...], values: Mapping[int, int]) -> Profile:
    out: list[int] = []
    it = iter(reduced_coords)
    for pos in range(g.n):
        out.append(values[pos] if pos in values else next(it))
    return tuple(out)


def _multiset_precheck(t: GameTables, left: RolePair, right: RolePair) -> bool:
    """Necessary condition: owners must see identical payoff multisets."""
    return t.multiset_key(left[0]) == t.multiset_key(right[0])


def _first_violations(g: Game, t: GameTables, perms: list[Perm], i: int, k: int) -> list[int]:
    return [
        kernels.first_role_violation(t.codes, t.perm_table(sigma), i, k)
        for sigma in perms
    ]


def _make_ce(g: Game, profile_index: int, sigma: Perm, i: int, k: int) -> RoleCounterexample:
    a = g.profile(profile_index)
    return RoleCounterexample(a, sigma, g.payoff_of(i, a), g.payoff_of(k, act(a, sigma)))


def blind_related(g: Game, left: RolePair, right: RolePair, certificate: bool = True) -> RoleRelationResult:
    """Every pinned permutation must transport right-owner payoffs onto left's.

    On failure the counterexample is the first failing (profile, permutation)
    pair, profiles ordered by table index, permutations lexicographically.
    """
    for x in (*left, *right):
        _check_player(g, x)
    t = tables(g)
    i, k = left[0], right[0]
    if not certificate and not _multiset_precheck(t, left, right):
        return RoleRelationResult(False, None, None, None)
    perms = pinned_perms(g.n, left, right)
    if not certificate:
        for sigma in perms:
            if kernels.first_role_violation(t.codes, t.perm_table(sigma), i, k) >= 0:
                return RoleRelationResult(False, None, None, None)
        return RoleRelationResult(True, None, None, None)
    firsts = _first_violations(g, t, perms, i, k)
    bad = [p for p in firsts if p >= 0]
    if not bad:
        return RoleRelationResult(True, None, None, None)
    first_profile = min(bad)
    sigma = perms[firsts.index(first_profile)]
    return RoleRelationResult(False, None, _make_ce(g, first_profile, sigma, i, k), None)


def twisted_related(g: Game, left: RolePair, right: RolePair, certificate: bool = True) -> RoleRelationResult:
    """Some pinned permutation must transport payoffs; witness is the first one."""
    for x in (*left, *right):
        _check_player(g, x)
    t = tables(g)
    i, k = left[0], right[0]
    if not certificate and not _multiset_precheck(t, left, right):
        return RoleRelationResult(False, None, None, None)
    perms = pinned_perms(g.n, left, right)
    failures: dict[Perm, RoleCounterexample] = {}
    for sigma in perms:
        p = kernels.first_role_violation(t.codes, t.perm_table(sigma), i, k)
        if p < 0:
            return RoleRelationResult(True, sigma, None, None)
        if certificate:
            failures[sigma] = _make_ce(g, p, sigma, i, k)
    if not certificate:
        return RoleRelationResult(False, None, None, None)
    first = failures[perms[0]]
    return RoleRelationResult(False, None, first, failures)


def simulates(g: Game, left: RolePair, right: RolePair, certificate: bool = True) -> RoleRelationResult:
    """Each profile may pick its own pinned permutation.

    The witness maps every profile to the first permutation that covers it.
    On failure the counterexample names the first profile no candidate
    covers, with the per-candidate payoff mismatches there.
    """
    for x in (*left, *right):
        _check_player(g, x)
    t = tables(g)
    i, k = left[0], right[0]
    perms = pinned_perms(g.n, left, right)
    ptabs = t.perm_tables(perms)
    if not certificate:
        p = kernels.first_uncovered_profile(t.codes, ptabs, i, k)
        return RoleRelationResult(p < 0, None, None, None)
    cover = kernels.simulation_cover(t.codes, ptabs, i, k)
    uncovered = np.flatnonzero(cover < 0)
    if uncovered.size == 0:
        witness = {g.profile(p): perms[int(c)] for p, c in enumerate(cover)}
        return RoleRelationResult(True, witness, None, None)
    p = int(uncovered[0])
    failures = {sigma: _make_ce(g, p, sigma, i, k) for sigma in perms}
    return RoleRelationResult(False, None, failures[perms[0]], failures)


_RELATIONS = {"B": blind_related, "T": twisted_related, "M": simulates}


def role_related(g: Game, flavor: str, left: RolePair, right: RolePair, certificate: bool = True) -> RoleRelationResult:
    """Dispatch on relation flavor: ``"B"`` blind, ``"T"`` twisted, ``"M"`` simulation."""
    try:
        fn = _RELATIONS[flavor]
    except KeyError:
        raise ValueError(f"unknown role relation flavor {flavor!r}") from None
    return fn(g, left, right, certificate)


def all_roles(n: int) -> tuple[list[RolePair], list[RolePair]]:
    """(diagonal roles, two-player roles), both in lexicographic order."""
    diag = [(i, i) for i in range(n)]
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    return diag, off


def role_relation_matrix(g: Game, flavor: str) -> dict[tuple[RolePair, RolePair], bool]:
    """Verdicts for every ordered same-arity role pair, cached per game."""
    t = tables(g)
    cache = getattr(t, "analysis_cache", None)
    if cache is None:
        cache = t.analysis_cache = {}
    key = ("role_matrix", flavor)
    if key not in cache:
        diag, off = all_roles(g.n)
        out: dict[tuple[RolePair, RolePair], bool] = {}
        for group in (diag, off):
            for left in group:
                for right in group:
                    out[(left, right)] = role_related(g, flavor, left, right, certificate=False).holds
        cache[key] = out
    return cache[key]


@dataclass(frozen=True)
class TrClasses:
    """Equivalence classes of roles under the twisted relation."""

    diagonal: tuple[tuple[RolePair, ...], ...]
    off_diagonal: tuple[tuple[RolePair, ...], ...]


def tr_equivalence_classes(g: Game) -> TrClasses:
    """Partition roles by twisted-relatedness, diagonal roles separately.

    Built by union-find over all pairwise verdicts; since the relation is an
    equivalence this is exactly its quotient.
    """
    matrix = role_relation_matrix(g, "T")
    diag, off = all_roles(g.n)

    def classes_of(group: list[RolePair]) -> tuple[tuple[RolePair, ...], ...]:
        parent = {r: r for r in group}

        def find(x: RolePair) -> RolePair:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in group:
            for b in group:
                if matrix[(a, b)]:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        buckets: dict[RolePair, list[RolePair]] = {}
        for r in group:
            buckets.setdefault(find(r), []).append(r)
        return tuple(tuple(sorted(members)) for _, members in sorted(buckets.items()))

    return TrClasses(classes_of(diag), classes_of(off))

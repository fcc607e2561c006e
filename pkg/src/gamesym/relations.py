"""Pairwise relations between players, built on the role machinery.

For players ``i`` and ``j``:

B (blind)      roles toward each other match under every pinning permutation
R (rigid)      payoffs match under the bare transposition of ``i`` and ``j``
T (twisted)    roles toward each other match under some pinning permutation
M (simulation) every profile has its own matching permutation

P-family       some seat bijection sending ``i`` to ``j`` aligns all of
               ``i``'s roles with ``j``'s at once, payoffs transported by its
               inverse
Q-family       ``j`` only needs some matching role per role of ``i``, chosen
               independently, in the requested flavor

Verdicts are exact; witnesses and counterexamples always come from the fixed
lexicographic enumeration orders, so repeated runs report identical output.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .engine import tables
from .game import Game
from .permutation import Perm, enumerate_constrained, inverse
from .roles import (
    RoleCounterexample,
    RoleRelationResult,
    _make_ce,
    all_roles,
    role_related,
    role_relation_matrix,
)
from . import kernels
from .symmetry import AnonymousGame, anonymous_representation, classify, invariance_group

RELATION_NAMES = ("B", "R", "T", "M", "PB", "PT", "PM", "QB", "QT", "QM")


def blind(g: Game, i: int, j: int, certificate: bool = True) -> RoleRelationResult:
    """iBj: the roles of ``i`` toward ``j`` and of ``j`` toward ``i`` are
    blindly related; ``iBi`` compares the diagonal role with itself."""
    return role_related(g, "B", (i, j), (j, i), certificate)


def rigid(g: Game, i: int, j: int, certificate: bool = True) -> RoleRelationResult:
    """iRj: swapping just ``i`` and ``j`` carries ``j``'s payoff onto ``i``'s.

    ``iRi`` holds by convention.
    """
    if i == j:
        return RoleRelationResult(True, None, None, None)
    swap = list(range(g.n))
    swap[i], swap[j] = j, i
    sigma: Perm = tuple(swap)
    t = tables(g)
    p = kernels.first_role_violation(t.codes, t.perm_table(sigma), i, j)
    if p < 0:
        return RoleRelationResult(True, None, None, None)
    if not certificate:
        return RoleRelationResult(False, None, None, None)
    return RoleRelationResult(False, None, _make_ce(g, p, sigma, i, j), None)


def twisted(g: Game, i: int, j: int, certificate: bool = True) -> RoleRelationResult:
    """iTj: the roles of ``i`` toward ``j`` and of ``j`` toward ``i`` are
    twistedly related."""
    return role_related(g, "T", (i, j), (j, i), certificate)


def simulates_player(g: Game, i: int, j: int, certificate: bool = True) -> RoleRelationResult:
    """iMj: the role of ``i`` toward ``j`` simulates the role of ``j`` toward ``i``."""
    return role_related(g, "M", (i, j), (j, i), certificate)


@dataclass(frozen=True)
class PRelationResult:
    """Outcome of the whole-role-map alignment between two players."""

    holds: bool
    witness: Perm | None
    failures: Mapping[Perm, RoleCounterexample] | None


def p_relation(g: Game, i: int, j: int, flavor: str = "B", certificate: bool = True) -> PRelationResult:
    """iP^Xj: one bijection ``tau`` with ``tau[i] == j`` aligns every role of
    ``i`` with the corresponding role of ``j``.

    Alignment under ``tau`` pins the transport permutation completely, to
    ``inverse(tau)``, so a candidate passes exactly when that inverse carries
    ``j``'s payoffs onto ``i``'s at every profile.  The flavor argument is
    accepted for symmetry with the Q family but cannot change the verdict:
    with a single admissible permutation the three matching modes coincide.
    The witness is the first passing ``tau`` in lexicographic order.
    """
    if flavor not in ("B", "T", "M"):
        raise ValueError(f"unknown relation flavor {flavor!r}")
    t = tables(g)
    failures: dict[Perm, RoleCounterexample] = {}
    for tau in enumerate_constrained(g.n, {i: j}):
        sigma = inverse(tau)
        p = kernels.first_role_violation(t.codes, t.perm_table(sigma), i, j)
        if p < 0:
            return PRelationResult(True, tau, None)
        if certificate:
            failures[tau] = _make_ce(g, p, sigma, i, j)
    return PRelationResult(False, None, failures if certificate else None)


@dataclass(frozen=True)
class QRelationResult:
    """Outcome of the role-by-role matching between two players."""

    holds: bool
    diagonal: RoleRelationResult
    assignment: Mapping[int, int] | None
    unmatched: int | None


def q_relation(g: Game, i: int, j: int, flavor: str = "B", certificate: bool = True) -> QRelationResult:
    """iQ^Xj: ``j`` answers each role of ``i`` with some role of its own.

    The diagonal roles of ``i`` and ``j`` must be related in the requested
    flavor, and every role of ``i`` toward ``k != i`` must be related to the
    role of ``j`` toward some ``l != j``, each ``k`` choosing independently.
    The assignment records the first matching ``l`` per ``k``.
    """
    if flavor not in ("B", "T", "M"):
        raise ValueError(f"unknown relation flavor {flavor!r}")
    diag = role_related(g, flavor, (i, i), (j, j), certificate)
    if not diag.holds:
        return QRelationResult(False, diag, None, None)
    assignment: dict[int, int] = {}
    for k in range(g.n):
        if k == i:
            continue
        for l in range(g.n):
            if l == j:
                continue
            if role_related(g, flavor, (i, k), (j, l), certificate=False).holds:
                assignment[k] = l
                break
        else:
            return QRelationResult(False, diag, None, k)
    return QRelationResult(True, diag, assignment, None)


def _player_verdicts(g: Game, name: str) -> dict[tuple[int, int], bool]:
    """Boolean matrix for one relation, cached per game."""
    t = tables(g)
    cache = getattr(t, "analysis_cache", None)
    if cache is None:
        cache = t.analysis_cache = {}
    key = ("player_matrix", name)
    if key in cache:
        return cache[key]
    out: dict[tuple[int, int], bool] = {}
    if name in ("B", "T", "M"):
        matrix = role_relation_matrix(g, name)
        for i in range(g.n):
            for j in range(g.n):
                out[(i, j)] = matrix[((i, j), (j, i))]
    elif name == "R":
        for i in range(g.n):
            for j in range(g.n):
                out[(i, j)] = rigid(g, i, j, certificate=False).holds
    elif name in ("PB", "PT", "PM"):
        for i in range(g.n):
            for j in range(g.n):
                out[(i, j)] = p_relation(g, i, j, name[1], certificate=False).holds
    elif name in ("QB", "QT", "QM"):
        for i in range(g.n):
            for j in range(g.n):
                out[(i, j)] = q_relation(g, i, j, name[1], certificate=False).holds
    else:
        raise ValueError(f"unknown relation {name!r}")
    cache[key] = out
    return out


@dataclass(frozen=True)
class RelationMatrix:
    """All pairwise outcomes of one relation, with certificates."""

    name: str
    n: int
    cells: Mapping[tuple[int, int], object]

    def holds(self, i: int, j: int) -> bool:
        return self.cells[(i, j)].holds

    def grid(self) -> list[list[bool]]:
        return [[self.holds(i, j) for j in range(self.n)] for i in range(self.n)]


def relation_matrix(g: Game, name: str) -> RelationMatrix:
    """Evaluate one relation on every ordered player pair."""
    if name not in RELATION_NAMES:
        raise ValueError(f"unknown relation {name!r}, expected one of {RELATION_NAMES}")
    single = {
        "B": blind,
        "R": rigid,
        "T": twisted,
        "M": simulates_player,
    }
    cells: dict[tuple[int, int], object] = {}
    for i in range(g.n):
        for j in range(g.n):
            if name in single:
                cells[(i, j)] = single[name](g, i, j)
            elif name.startswith("P"):
                cells[(i, j)] = p_relation(g, i, j, name[1])
            else:
                cells[(i, j)] = q_relation(g, i, j, name[1])
    return RelationMatrix(name, g.n, cells)


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    counterexample: tuple | None


@dataclass(frozen=True)
class PropertyReport:
    """Reflexivity, symmetry and transitivity of each relation on one game."""

    entries: Mapping[str, Mapping[str, PropertyVerdict]]


def _matrix_properties(matrix: Mapping, keys: list) -> dict[str, PropertyVerdict]:
    reflexive = PropertyVerdict(True, None)
    for x in keys:
        if not matrix[(x, x)]:
            reflexive = PropertyVerdict(False, (x,))
            break
    symmetric = PropertyVerdict(True, None)
    for x in keys:
        for y in keys:
            if matrix[(x, y)] and not matrix[(y, x)]:
                symmetric = PropertyVerdict(False, (x, y))
                break
        if not symmetric.holds:
            break
    transitive = PropertyVerdict(True, None)
    for x in keys:
        if not transitive.holds:
            break
        for y in keys:
            if not transitive.holds:
                break
            if not matrix[(x, y)]:
                continue
            for z in keys:
                if matrix[(y, z)] and not matrix[(x, z)]:
                    transitive = PropertyVerdict(False, (x, y, z))
                    break
    return {"reflexive": reflexive, "symmetric": symmetric, "transitive": transitive}


def property_report(g: Game) -> PropertyReport:
    """Which structural properties each relation actually has on this game."""
    entries: dict[str, dict[str, PropertyVerdict]] = {}
    diag, off = all_roles(g.n)
    for flavor in ("B", "T", "M"):
        matrix = role_relation_matrix(g, flavor)
        merged: dict[str, PropertyVerdict] = {}
        diag_props = _matrix_properties(matrix, diag)
        off_props = _matrix_properties(matrix, off)
        for prop in ("reflexive", "symmetric", "transitive"):
            a, b = diag_props[prop], off_props[prop]
            merged[prop] = a if not a.holds else b
        entries[flavor + "r"] = merged
    for name in ("B", "R", "T", "M"):
        verdicts = _player_verdicts(g, name)
        entries[name] = _matrix_properties(verdicts, list(range(g.n)))
    return PropertyReport(entries)


@dataclass(frozen=True)
class DiagnosticEntry:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class DiagnosticsReport:
    """Cross-checks that must hold on every game; a failure is a bug here,
    never a property of the analyzed game."""

    entries: tuple[DiagnosticEntry, ...]
    observations: tuple[DiagnosticEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


def diagnostics(g: Game) -> DiagnosticsReport:
    """Verify the web of equivalences and inclusions tying the analyses together.

    Two checks are deliberately demoted to observations.  P within Q in the
    blind flavor: aligning all roles through one bijection is an existential
    requirement while blind matching of the diagonal roles alone is
    universal, so games where some but not every pinned permutation
    transports payoffs land on opposite sides.  And for two-player games,
    permutation-transported payoffs no longer force one shared payoff
    function per orbit (that argument routes through a third seat), so
    dm_symmetric can hold without self_symmetric when n == 2.
    """
    cls = classify(g, certificates=False)
    group = invariance_group(g)
    rep_ok = isinstance(anonymous_representation(g), AnonymousGame)
    players = list(range(g.n))
    b = _player_verdicts(g, "B")
    r = _player_verdicts(g, "R")
    tm = _player_verdicts(g, "T")
    m = _player_verdicts(g, "M")
    pb, pt, pm = (_player_verdicts(g, x) for x in ("PB", "PT", "PM"))
    qb, qt, qm = (_player_verdicts(g, x) for x in ("QB", "QT", "QM"))

    entries: list[DiagnosticEntry] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        entries.append(DiagnosticEntry(name, ok, detail if not ok else ""))

    all_diag_b = all(b[(i, i)] for i in players)
    all_b = all(b[(i, j)] for i in players for j in players)
    all_r = all(r[(i, j)] for i in players for j in players)
    check("anonymous_iff_diagonal_blind", cls.anonymous == all_diag_b,
          f"classify={cls.anonymous} diagonal-blind={all_diag_b}")
    check("anonymous_iff_representation", cls.anonymous == rep_ok,
          f"classify={cls.anonymous} representation={rep_ok}")
    check("symmetric_iff_all_blind", cls.symmetric == all_b,
          f"classify={cls.symmetric} all-blind={all_b}")
    check("symmetric_iff_full_group", cls.symmetric == (len(group) == math.factorial(g.n)),
          f"classify={cls.symmetric} group-order={len(group)}")
    check("all_rigid_implies_symmetric", (not all_r) or cls.symmetric,
          f"all-rigid={all_r} symmetric={cls.symmetric}")
    check("self_symmetric_implies_dm", (not cls.self_symmetric) or cls.dm_symmetric,
          f"self-symmetric={cls.self_symmetric} dm={cls.dm_symmetric}")
    if g.n >= 3:
        check("dm_implies_self_symmetric", (not cls.dm_symmetric) or cls.self_symmetric,
              f"dm={cls.dm_symmetric} self-symmetric={cls.self_symmetric}")

    chain_ok, chain_detail = True, ""
    for i in players:
        for j in players:
            cell = (i, j)
            if (b[cell] and not r[cell]) or (r[cell] and not tm[cell]) or (tm[cell] and not m[cell]):
                chain_ok, chain_detail = False, f"cell {(i + 1, j + 1)}"
                break
        if not chain_ok:
            break
    check("blind_within_rigid_within_twisted_within_simulation", chain_ok, chain_detail)

    role_ok, role_detail = True, ""
    for flavor_small, flavor_big in (("B", "T"), ("T", "M")):
        small = role_relation_matrix(g, flavor_small)
        big = role_relation_matrix(g, flavor_big)
        for pair, holds in small.items():
            if holds and not big[pair]:
                role_ok, role_detail = False, f"{flavor_small}->{flavor_big} at {pair}"
                break
        if not role_ok:
            break
    check("role_chain", role_ok, role_detail)

    def included(small: Mapping, big: Mapping, name: str) -> None:
        for cell, holds in small.items():
            if holds and not big[cell]:
                check(name, False, f"cell {(cell[0] + 1, cell[1] + 1)}")
                return
        check(name, True)

    included(tm, pb, "twisted_within_p_blind")
    included(pb, pt, "p_chain_blind_twisted")
    included(pt, pm, "p_chain_twisted_simulation")
    included(qb, qt, "q_chain_blind_twisted")
    included(qt, qm, "q_chain_twisted_simulation")
    included(pt, qt, "p_within_q_twisted")
    included(pm, qm, "p_within_q_simulation")

    pq_blind = all((not pb[cell]) or qb[cell] for cell in pb)
    observations = [
        DiagnosticEntry("p_within_q_blind", pq_blind,
                        "informational: not a theorem, see diagnostics docstring"),
    ]
    if g.n == 2:
        observations.append(
            DiagnosticEntry("dm_implies_self_symmetric",
                            (not cls.dm_symmetric) or cls.self_symmetric,
                            "informational: needs a third player to bind"))
    return DiagnosticsReport(tuple(entries), tuple(observations))

"""Finite normal-form games with one shared action set and exact rational payoffs.

Profiles are tuples of action indices, one per player, and map to a dense
table index by treating the tuple as a base-``s`` number with player 1 as the
most significant digit.  Profile enumeration order therefore coincides with
table index order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .permutation import Perm

Profile = tuple[int, ...]


class GameFormatError(ValueError):
    """Raised for malformed game files and inconsistent payoff tables."""


def parse_rational(value: object) -> Fraction:
    """Exact rational from an int, a ``"p/q"`` string, or a finite decimal string.

    Floats are rejected: a JSON number like 0.1 has no exact decimal reading
    once it reaches us as a binary float, so files must quote non-integers.
    """
    if isinstance(value, bool):
        raise GameFormatError(f"malformed rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise GameFormatError(
            f"malformed rational {value!r}: write non-integers as strings, e.g. \"1/3\" or \"0.25\""
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GameFormatError(f"malformed rational: {value!r}") from exc
    raise GameFormatError(f"malformed rational: {value!r}")


def format_rational(x: Fraction) -> object:
    """JSON-friendly form: plain int when integral, else a ``"p/q"`` string."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ReducedProfile:
    """A profile with one or two players removed.

    ``coords`` keeps the remaining players' actions in increasing player
    order; ``removed`` records which players were dropped.
    """

    coords: tuple[int, ...]
    removed: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coords) + len(self.removed)


@dataclass(frozen=True)
class Game:
    """An ``n``-player game where every player draws from the same action set.

    ``payoffs[p][i]`` is player ``i``'s payoff at the profile with table
    index ``p``.  Payoffs are ``Fraction`` throughout; equality of payoffs is
    exact, never approximate.
    """

    n: int
    actions: tuple[str, ...]
    payoffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GameFormatError(f"need at least one player, got {self.n}")
        if len(self.actions) < 1:
            raise GameFormatError("need at least one action")
        if len(set(self.actions)) != len(self.actions):
            raise GameFormatError(f"duplicate action names in {self.actions!r}")
        for name in self.actions:
            if not name or "," in name:
                raise GameFormatError(f"invalid action name {name!r}")
        if len(self.payoffs) != len(self.actions) ** self.n:
            raise GameFormatError(
                f"payoff table has {len(self.payoffs)} rows, expected {len(self.actions) ** self.n}"
            )
        for row in self.payoffs:
            if len(row) != self.n:
                raise GameFormatError(f"payoff vector {row!r} does not have {self.n} entries")

    @property
    def s(self) -> int:
        return len(self.actions)

    @property
    def size(self) -> int:
        return len(self.payoffs)

    def action_index(self, name: str) -> int:
        try:
            return self.actions.index(name)
        except ValueError:
            raise GameFormatError(f"unknown action name {name!r}") from None

    def index_of(self, profile: Sequence[int]) -> int:
        idx = 0
        for a in profile:
            idx = idx * self.s + a
        return idx

    def profile(self, index: int) -> Profile:
        coords = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            index, coords[i] = divmod(index, self.s)
        return tuple(coords)

    def profiles(self) -> Iterator[Profile]:
        for index in range(self.size):
            yield self.profile(index)

    def payoff(self, profile: Sequence[int]) -> tuple[Fraction, ...]:
        return self.payoffs[self.index_of(profile)]

    def payoff_of(self, player: int, profile: Sequence[int]) -> Fraction:
        return self.payoffs[self.index_of(profile)][player]

    def profile_names(self, profile: Sequence[int]) -> str:
        return ",".join(self.actions[a] for a in profile)

    def profile_from_names(self, key: str) -> Profile:
        parts = key.split(",")
        if len(parts) != self.n:
            raise GameFormatError(f"profile key {key!r} does not list {self.n} actions")
        return tuple(self.action_index(p.strip()) for p in parts)

    @classmethod
    def from_table(
        cls,
        n: int,
        actions: Sequence[str],
        table: Mapping[Sequence[int] | str, Sequence[object]],
        default: Sequence[object] | None = None,
    ) -> "Game":
        """Build a game from a sparse profile table.

        Keys may be coordinate tuples or comma-joined action names.  Profiles
        missing from ``table`` take ``default``, which must be present if the
        table is partial.
        """
        actions = tuple(actions)
        s = len(actions)
        size = s ** n
        stub = cls(n, actions, tuple((tuple([Fraction(0)] * n),) * size))
        filled: list[tuple[Fraction, ...] | None] = [None] * size
        for key, vec in table.items():
            profile = stub.profile_from_names(key) if isinstance(key, str) else tuple(key)
            if any(not 0 <= a < s for a in profile) or len(profile) != n:
                raise GameFormatError(f"bad profile key {key!r}")
            idx = stub.index_of(profile)
            if filled[idx] is not None:
                raise GameFormatError(f"duplicate profile key {key!r}")
            if len(vec) != n:
                raise GameFormatError(f"payoff vector for {key!r} has {len(vec)} entries, expected {n}")
            filled[idx] = tuple(parse_rational(v) for v in vec)
        if any(row is None for row in filled):
            if default is None:
                missing = stub.profile_names(stub.profile(filled.index(None)))
                raise GameFormatError(f"profile {missing!r} has no payoffs and no default is declared")
            if len(default) != n:
                raise GameFormatError(f"default vector has {len(default)} entries, expected {n}")
            fallback = tuple(parse_rational(v) for v in default)
            filled = [row if row is not None else fallback for row in filled]
        return cls(n, actions, tuple(filled))  # type: ignore[arg-type]


def act(profile: Sequence[int], sigma: Perm) -> Profile:
    """Right action of a seat permutation: seat ``i`` of the result holds ``profile[sigma[i]]``.

    Acting by ``sigma`` then ``tau`` equals acting by ``compose(sigma, tau)``.
    """
    return tuple(profile[s] for s in sigma)


def commutative_image(profile: Sequence[int] | ReducedProfile, num_actions: int) -> tuple[int, ...]:
    """Occupancy counts per action: entry ``a`` counts the players playing ``a``.

    Two profiles are permutations of one another exactly when their images
    coincide.
    """
    coords = profile.coords if isinstance(profile, ReducedProfile) else profile
    counts = [0] * num_actions
    for a in coords:
        counts[a] += 1
    return tuple(counts)


def witness_permutation(a: Sequence[int], b: Sequence[int]) -> Perm | None:
    """A permutation ``sigma`` with ``act(b, sigma) == a``, or None.

    Exists iff the two profiles have equal commutative images.  The canonical
    choice maps each seat ``i`` to the smallest not-yet-used seat of ``b``
    holding the action ``a[i]``.
    """
    if len(a) != len(b):
        return None
    used = [False] * len(b)
    images = []
    for x in a:
        for k, y in enumerate(b):
            if not used[k] and y == x:
                used[k] = True
                images.append(k)
                break
        else:
            return None
    return tuple(images)


def restrict(profile: Sequence[int], remove: Iterable[int]) -> ReducedProfile:
    """Drop one or two players from a profile."""
    removed = tuple(sorted(set(remove)))
    if not 1 <= len(removed) <= 2:
        raise ValueError(f"can only remove one or two players, got {removed!r}")
    for i in removed:
        if not 0 <= i < len(profile):
            raise ValueError(f"player {i} out of range")
    coords = tuple(x for i, x in enumerate(profile) if i not in removed)
    return ReducedProfile(coords, removed)


def extend(reduced: ReducedProfile, values: Mapping[int, int]) -> Profile:
    """Re-insert the removed players; inverse of :func:`restrict`."""
    if set(values) != set(reduced.removed):
        raise ValueError(f"values {sorted(values)!r} do not match removed players {reduced.removed!r}")
    out: list[int] = []
    it = iter(reduced.coords)
    for i in range(reduced.n):
        out.append(values[i] if i in values else next(it))
    return tuple(out)


def _reject_constant(token: str) -> None:
    raise GameFormatError(f"non-finite number {token!r} in game file")


def parse_game(data: str | bytes) -> Game:
    """Read a game from its JSON document.

    The document holds ``players``, ``actions``, an optional ``default``
    payoff vector, and a ``payoffs`` object keyed by comma-joined action
    names.  An optional ``meta`` object is carried by generated files and is
    ignored here.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")

    def no_dupes(pairs: list[tuple[str, object]]) -> dict:
        seen = set()
        for key, _ in pairs:
            if key in seen:
                raise GameFormatError(f"duplicate profile key {key!r}")
            seen.add(key)
        return dict(pairs)

    try:
        doc = json.loads(data, object_pairs_hook=no_dupes, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GameFormatError("game file must be a JSON object")
    unknown = set(doc) - {"players", "actions", "default", "payoffs", "meta"}
    if unknown:
        raise GameFormatError(f"unknown fields in game file: {sorted(unknown)}")
    for field in ("players", "actions", "payoffs"):
        if field not in doc:
            raise GameFormatError(f"game file is missing {field!r}")
    n = doc["players"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GameFormatError(f"players must be a positive integer, got {n!r}")
    actions = doc["actions"]
    if not isinstance(actions, list) or not all(isinstance(x, str) for x in actions):
        raise GameFormatError("actions must be an array of names")
    payoffs = doc["payoffs"]
    if not isinstance(payoffs, dict):
        raise GameFormatError("payoffs must be an object keyed by profiles")
    return Game.from_table(n, actions, payoffs, default=doc.get("default"))


def serialize_game(g: Game, meta: Mapping[str, object] | None = None) -> bytes:
    """Canonical JSON bytes for ``g``; ``parse_game`` returns an equal game."""
    doc: dict[str, object] = {
        "players": g.n,
        "actions": list(g.actions),
        "payoffs": {
            g.profile_names(g.profile(p)): [format_rational(x) for x in g.payoffs[p]]
            for p in range(g.size)
        },
    }
    if meta is not None:
        doc["meta"] = dict(meta)
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")

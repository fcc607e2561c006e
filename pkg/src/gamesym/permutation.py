"""Permutations of player seats.

A permutation of ``n`` seats is a tuple of images: ``sigma[i]`` is the seat
that ``sigma`` sends seat ``i`` to.  Seats are 0-based internally; the textual
cycle form is 1-based to match the reporting conventions used everywhere else.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Mapping, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def check_perm(sigma: Sequence[int]) -> Perm:
    """Validate that ``sigma`` is a permutation of ``range(len(sigma))``."""
    p = tuple(sigma)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")
    return p


def compose(sigma: Perm, tau: Perm) -> Perm:
    """Composite permutation mapping ``i`` to ``sigma[tau[i]]`` (tau acts first)."""
    if len(sigma) != len(tau):
        raise ValueError("cannot compose permutations of different sizes")
    return tuple(sigma[t] for t in tau)


def compose_all(perms: Sequence[Perm]) -> Perm:
    """Left-to-right product: ``compose_all([a, b, c]) == compose(compose(a, b), c)``."""
    if not perms:
        raise ValueError("empty product")
    out = perms[0]
    for p in perms[1:]:
        out = compose(out, p)
    return out


def inverse(sigma: Perm) -> Perm:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def cycles(sigma: Perm) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycle decomposition, canonical form.

    Fixed points are dropped, each cycle starts at its smallest member, and
    cycles are ordered by that smallest member.
    """
    n = len(sigma)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cur = start
        cyc = []
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = sigma[cur]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return tuple(out)


def from_cycles(n: int, cycle_list: Sequence[Sequence[int]]) -> Perm:
    """Build a permutation of ``n`` seats from 0-based cycles.

    Each cycle ``(c0, c1, ..., ck)`` maps ``c0`` to ``c1``, ``c1`` to ``c2``
    and ``ck`` back to ``c0``.  Cycles must be disjoint.
    """
    images = list(range(n))
    touched: set[int] = set()
    for cyc in cycle_list:
        for x in cyc:
            if not 0 <= x < n:
                raise ValueError(f"cycle member {x} out of range for n={n}")
            if x in touched:
                raise ValueError(f"cycles are not disjoint at {x}")
            touched.add(x)
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            images[a] = b
    return check_perm(images)


def perm_str(sigma: Perm) -> str:
    """1-based cycle notation, e.g. ``(1 2)(3 4)``; the identity prints as ``()``."""
    cyc = cycles(sigma)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


def enumerate_perms(n: int) -> Iterator[Perm]:
    """All permutations of ``n`` seats in lexicographic order of the image tuple."""
    return iter(itertools.permutations(range(n)))


def enumerate_constrained(n: int, pins: Mapping[int, int]) -> Iterator[Perm]:
    """Permutations satisfying ``sigma[pos] == value`` for every pinned pair.

    Yields in lexicographic order of the image tuple.  The number of results
    is ``(n - len(pins))!`` when the pins are consistent.
    """
    fixed = dict(pins)
    for pos, val in fixed.items():
        if not (0 <= pos < n and 0 <= val < n):
            raise ValueError(f"pin {pos}->{val} out of range for n={n}")
    values = list(fixed.values())
    if len(set(values)) != len(values):
        raise ValueError(f"pins are not injective: {fixed!r}")

    free_pos = [i for i in range(n) if i not in fixed]
    free_val = [v for v in range(n) if v not in set(values)]
    base = [-1] * n
    for pos, val in fixed.items():
        base[pos] = val

    def gen() -> Iterator[Perm]:
        for choice in itertools.permutations(free_val):
            images = base[:]
            for pos, val in zip(free_pos, choice):
                images[pos] = val
            yield tuple(images)

    return gen()

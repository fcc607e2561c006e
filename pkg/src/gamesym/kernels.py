"""Hot integer kernels behind the symmetry and relation scans.

All predicates reduce to comparisons over a dense ``codes`` table of shape
``(s**n, n)`` where equal payoffs share an integer code, so exact rational
equality becomes int64 equality.  Two interchangeable backends provide the
kernels: numba-compiled loops with early exits, and a pure-numpy fallback.
The numba backend is used when available; set ``GAMESYM_NO_NUMBA=1`` to force
the numpy path.  Both backends return identical values and are compared
directly by the test suite and by ``benchmarks/bench_kernels.py``.
"""
from __future__ import annotations

import os

import numpy as np


def _perm_profile_table_np(digits: np.ndarray, weights: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    return digits[:, sigma] @ weights


def _first_invariance_violation_np(codes: np.ndarray, ptab: np.ndarray, sigma: np.ndarray) -> tuple[int, int]:
    eq = codes[:, sigma] == codes[ptab]
    rows = eq.all(axis=1)
    if rows.all():
        return (-1, -1)
    p = int(np.argmin(rows))
    return (p, int(np.argmin(eq[p])))


def _first_dm_violation_np(codes: np.ndarray, ptab: np.ndarray, sigma: np.ndarray) -> tuple[int, int]:
    eq = codes == codes[ptab][:, sigma]
    rows = eq.all(axis=1)
    if rows.all():
        return (-1, -1)
    p = int(np.argmin(rows))
    return (p, int(np.argmin(eq[p])))


def _first_role_violation_np(codes: np.ndarray, ptab: np.ndarray, i: int, k: int) -> int:
    neq = codes[:, i] != codes[ptab, k]
    if not neq.any():
        return -1
    return int(neq.argmax())


def _simulation_cover_np(codes: np.ndarray, ptabs: np.ndarray, i: int, k: int) -> np.ndarray:
    eq = codes[:, i][None, :] == codes[ptabs, k]
    covered = eq.any(axis=0)
    first = eq.argmax(axis=0)
    return np.where(covered, first, -1).astype(np.int64)


def _first_uncovered_profile_np(codes: np.ndarray, ptabs: np.ndarray, i: int, k: int) -> int:
    covered = (codes[:, i][None, :] == codes[ptabs, k]).any(axis=0)
    if covered.all():
        return -1
    return int(np.argmin(covered))


_NUMPY_IMPL = {
    "perm_profile_table": _perm_profile_table_np,
    "first_invariance_violation": _first_invariance_violation_np,
    "first_dm_violation": _first_dm_violation_np,
    "first_role_violation": _first_role_violation_np,
    "simulation_cover": _simulation_cover_np,
    "first_uncovered_profile": _first_uncovered_profile_np,
}


def _build_numba_impl() -> dict:
    from numba import njit

    @njit(cache=True)
    def perm_profile_table(digits, weights, sigma):
        size, n = digits.shape
        out = np.empty(size, dtype=np.int64)
        for p in range(size):
            acc = 0
            for i in range(n):
                acc += digits[p, sigma[i]] * weights[i]
            out[p] = acc
        return out

    @njit(cache=True)
    def first_invariance_violation(codes, ptab, sigma):
        size, n = codes.shape
        for p in range(size):
            q = ptab[p]
            for i in range(n):
                if codes[p, sigma[i]] != codes[q, i]:
                    return (p, i)
        return (-1, -1)

    @njit(cache=True)
    def first_dm_violation(codes, ptab, sigma):
        size, n = codes.shape
        for p in range(size):
            q = ptab[p]
            for i in range(n):
                if codes[p, i] != codes[q, sigma[i]]:
                    return (p, i)
        return (-1, -1)

    @njit(cache=True)
    def first_role_violation(codes, ptab, i, k):
        size = codes.shape[0]
        for p in range(size):
            if codes[p, i] != codes[ptab[p], k]:
                return p
        return -1

    @njit(cache=True)
    def simulation_cover(codes, ptabs, i, k):
        m = ptabs.shape[0]
        size = codes.shape[0]
        out = np.empty(size, dtype=np.int64)
        for p in range(size):
            out[p] = -1
            for j in range(m):
                if codes[p, i] == codes[ptabs[j, p], k]:
                    out[p] = j
                    break
        return out

    @njit(cache=True)
    def first_uncovered_profile(codes, ptabs, i, k):
        m = ptabs.shape[0]
        size = codes.shape[0]
        for p in range(size):
            hit = False
            for j in range(m):
                if codes[p, i] == codes[ptabs[j, p], k]:
                    hit = True
                    break
            if not hit:
                return p
        return -1

    return {
        "perm_profile_table": perm_profile_table,
        "first_invariance_violation": first_invariance_violation,
        "first_dm_violation": first_dm_violation,
        "first_role_violation": first_role_violation,
        "simulation_cover": simulation_cover,
        "first_uncovered_profile": first_uncovered_profile,
    }


_impl: dict | None = None
_backend_name = "unresolved"


def _resolve() -> dict:
    global _impl, _backend_name
    if _impl is None:
        forced = os.environ.get("GAMESYM_NO_NUMBA", "").strip() not in ("", "0")
        if forced:
            _impl, _backend_name = _NUMPY_IMPL, "numpy"
        else:
            try:
                _impl, _backend_name = _build_numba_impl(), "numba"
            except ImportError:
                _impl, _backend_name = _NUMPY_IMPL, "numpy"
    return _impl


def backend() -> str:
    """Name of the active backend, ``"numba"`` or ``"numpy"``."""
    _resolve()
    return _backend_name


def numpy_impl() -> dict:
    """The fallback kernel set, exposed for benchmarks and equivalence tests."""
    return dict(_NUMPY_IMPL)


def numba_impl() -> dict:
    """The compiled kernel set; raises ImportError when numba is unavailable."""
    return dict(_build_numba_impl())


def perm_profile_table(digits: np.ndarray, weights: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """Table index of ``act(profile, sigma)`` for every profile index."""
    return _resolve()["perm_profile_table"](digits, weights, sigma)


def first_invariance_violation(codes: np.ndarray, ptab: np.ndarray, sigma: np.ndarray) -> tuple[int, int]:
    """First ``(profile, player)`` where payoff of seat ``sigma[i]`` at ``a``
    differs from payoff of seat ``i`` at ``act(a, sigma)``; ``(-1, -1)`` if none."""
    p, i = _resolve()["first_invariance_violation"](codes, ptab, sigma)
    return int(p), int(i)


def first_dm_violation(codes: np.ndarray, ptab: np.ndarray, sigma: np.ndarray) -> tuple[int, int]:
    """First ``(profile, player)`` where payoff of ``i`` at ``a`` differs from
    payoff of seat ``sigma[i]`` at ``act(a, sigma)``; ``(-1, -1)`` if none."""
    p, i = _resolve()["first_dm_violation"](codes, ptab, sigma)
    return int(p), int(i)


def first_role_violation(codes: np.ndarray, ptab: np.ndarray, i: int, k: int) -> int:
    """First profile where player ``i``'s payoff differs from player ``k``'s
    payoff at the permuted profile; ``-1`` if none."""
    return int(_resolve()["first_role_violation"](codes, ptab, i, k))


def simulation_cover(codes: np.ndarray, ptabs: np.ndarray, i: int, k: int) -> np.ndarray:
    """Per profile, the first candidate index in ``ptabs`` that matches the
    payoffs, or ``-1`` where no candidate works."""
    return _resolve()["simulation_cover"](codes, ptabs, i, k)


def first_uncovered_profile(codes: np.ndarray, ptabs: np.ndarray, i: int, k: int) -> int:
    """First profile no candidate covers; ``-1`` when every profile is covered."""
    return int(_resolve()["first_uncovered_profile"](codes, ptabs, i, k))

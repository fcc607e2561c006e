"""Timing comparison of the compiled kernels against the numpy fallback.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --players 5 --actions 3 --repeat 30

Two workloads bracket real usage.  A self-symmetric game never trips a
violation, so every scan runs its whole length; an unstructured seeded game
exits early almost immediately.  Each kernel is timed over the same sweep
of inputs the analyses actually issue: one call per group candidate for the
whole-game scans, one call per pinned candidate and ordered player pair for
the role scans.
"""
from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from gamesym.engine import tables
from gamesym.kernels import numpy_impl
from gamesym.oracle import GeneratorConfig, generate
from gamesym.permutation import enumerate_perms
from gamesym.roles import pinned_perms


def build_cases(g):
    """Per kernel: the argument tuples one full analysis pass would issue."""
    t = tables(g)
    perms = list(enumerate_perms(g.n))
    arrs = [np.array(s, dtype=np.int64) for s in perms]
    ptabs = [t.perm_table(s) for s in perms]
    pairs = [(i, j) for i in range(g.n) for j in range(g.n) if i != j]

    cases = {
        "perm_profile_table": [(t.digits, t.weights, a) for a in arrs],
        "first_invariance_violation": [
            (t.codes, tab, a) for tab, a in zip(ptabs, arrs)
        ],
        "first_dm_violation": [(t.codes, tab, a) for tab, a in zip(ptabs, arrs)],
        "first_role_violation": [],
        "simulation_cover": [],
        "first_uncovered_profile": [],
    }
    for i, j in pairs:
        candidates = pinned_perms(g.n, (i, j), (j, i))
        stack = t.perm_tables(candidates)
        for sigma in candidates:
            cases["first_role_violation"].append((t.codes, t.perm_table(sigma), i, j))
        cases["simulation_cover"].append((t.codes, stack, i, j))
        cases["first_uncovered_profile"].append((t.codes, stack, i, j))
    return cases


def time_sweep(fn, sweep, repeat: int) -> float:
    """Best wall-clock seconds for one pass over every argument tuple."""
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in sweep:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def run_workload(label: str, g, impls, repeat: int) -> None:
    cases = build_cases(g)
    print(f"\n{label}: {g.n} players, {g.s} actions, {g.size} profiles")
    print(f"{'kernel':<28} {'calls':>6} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, sweep in cases.items():
        for impl in impls.values():
            for args in sweep[:1]:
                impl[name](*args)  # warm-up; lets numba compile outside the clock
        timed = {
            backend: time_sweep(impl[name], sweep, repeat)
            for backend, impl in impls.items()
        }
        ratio = timed["numpy"] / timed["numba"] if timed["numba"] > 0 else float("inf")
        print(
            f"{name:<28} {len(sweep):>6} "
            f"{timed['numpy'] * 1e3:>8.2f}ms {timed['numba'] * 1e3:>8.2f}ms "
            f"{ratio:>7.1f}x"
        )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--players", type=int, default=6)
    parser.add_argument("--actions", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=20,
                        help="sweeps per measurement; best of all is reported")
    args = parser.parse_args(argv)

    try:
        from gamesym.kernels import numba_impl
        impls = {"numpy": numpy_impl(), "numba": numba_impl()}
    except ImportError:
        print("numba is not importable; nothing to compare", file=sys.stderr)
        return 1

    full = generate(GeneratorConfig(
        n=args.players, s=args.actions, seed=args.seed, mode="self_symmetric"))
    run_workload("full-length scans (self-symmetric)", full, impls, args.repeat)

    early = generate(GeneratorConfig(
        n=args.players, s=args.actions, seed=args.seed, mode="general"))
    run_workload("early-exit scans (unstructured)", early, impls, args.repeat)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Shared test material: catalog games and seeded generated populations.

Population seeds are fixed constants, so every run sees the same games and
every assertion over a population is deterministic.
"""
from __future__ import annotations

import pytest

from gamesym.fixtures import FIXTURE_NAMES, fixture
from gamesym.oracle import GeneratorConfig, generate

# Mode cycle for generated populations: half unconstrained, the rest split
# between the two structured modes so the holding side of each equivalence
# is exercised, not just the failing side.
MODE_CYCLE = ("general", "general", "anonymous", "self_symmetric")

# (players, actions, count) per size class.  Small sizes carry the bulk;
# totals: population 1020 games, reference_population 500 games.
POPULATION_SIZES = (
    (2, 2, 170),
    (2, 3, 170),
    (3, 2, 160),
    (3, 3, 160),
    (4, 2, 120),
    (4, 3, 120),
    (5, 2, 60),
    (5, 3, 60),
)

# The reference twins re-enumerate permutations per profile in pure Python,
# so the sizes here are weighted harder toward the cheap end.
REFERENCE_SIZES = (
    (2, 2, 130),
    (2, 3, 90),
    (3, 2, 130),
    (3, 3, 84),
    (4, 2, 50),
    (4, 3, 10),
    (5, 2, 6),
)


def build_population(sizes, seed_base: int):
    games = []
    seed = seed_base
    for n, s, count in sizes:
        for k in range(count):
            cfg = GeneratorConfig(n=n, s=s, seed=seed, mode=MODE_CYCLE[k % len(MODE_CYCLE)])
            games.append(generate(cfg))
            seed += 1
    return games


@pytest.fixture(scope="session")
def catalog():
    return {name: fixture(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def population(catalog):
    """Catalog games plus 1020 seeded games, n in 2..5, s in 2..3."""
    return list(catalog.values()) + build_population(POPULATION_SIZES, seed_base=0)


@pytest.fixture(scope="session")
def reference_population(catalog):
    """Catalog games plus 500 seeded games sized for the reference twins."""
    return list(catalog.values()) + build_population(REFERENCE_SIZES, seed_base=10_000)

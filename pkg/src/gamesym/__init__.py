"""Structural symmetry analysis for finite normal-form games.

Parse or build a :class:`~gamesym.game.Game`, then ask how interchangeable
its players are: full classification (:func:`classify`), the invariance
group and profile orbits, role-level and player-level relations with exact
witnesses, and seeded generators plus naive reference implementations for
differential testing.
"""
from .game import (
    Game,
    GameFormatError,
    ReducedProfile,
    act,
    commutative_image,
    extend,
    parse_game,
    restrict,
    serialize_game,
    witness_permutation,
)
from .permutation import (
    compose,
    compose_all,
    cycles,
    enumerate_constrained,
    enumerate_perms,
    from_cycles,
    identity,
    inverse,
    perm_str,
)
from .symmetry import (
    AnonymousGame,
    Classification,
    OrbitPartition,
    RepresentationConflict,
    anonymous_representation,
    classify,
    enumerate_partitions,
    invariance_group,
    is_invariant,
    orbits,
)
from .roles import (
    MixedArityError,
    Role,
    RoleRelationResult,
    all_roles,
    blind_related,
    extract_role,
    role_related,
    simulates,
    tr_equivalence_classes,
    twisted_related,
)
from .relations import (
    RELATION_NAMES,
    DiagnosticsReport,
    PropertyReport,
    RelationMatrix,
    blind,
    diagnostics,
    p_relation,
    property_report,
    q_relation,
    relation_matrix,
    rigid,
    simulates_player,
    twisted,
)
from .oracle import GeneratorConfig, SizeGuardError, generate
from .fixtures import FIXTURE_NAMES, fixture, fixture_with_star_fill, verify_fixtures

__version__ = "0.1.0"

__all__ = [
    "Game",
    "GameFormatError",
    "ReducedProfile",
    "act",
    "commutative_image",
    "extend",
    "parse_game",
    "restrict",
    "serialize_game",
    "witness_permutation",
    "compose",
    "compose_all",
    "cycles",
    "enumerate_constrained",
    "enumerate_perms",
    "from_cycles",
    "identity",
    "inverse",
    "perm_str",
    "AnonymousGame",
    "Classification",
    "OrbitPartition",
    "RepresentationConflict",
    "anonymous_representation",
    "classify",
    "enumerate_partitions",
    "invariance_group",
    "is_invariant",
    "orbits",
    "MixedArityError",
    "Role",
    "RoleRelationResult",
    "all_roles",
    "blind_related",
    "extract_role",
    "role_related",
    "simulates",
    "tr_equivalence_classes",
    "twisted_related",
    "RELATION_NAMES",
    "DiagnosticsReport",
    "PropertyReport",
    "RelationMatrix",
    "blind",
    "diagnostics",
    "p_relation",
    "property_report",
    "q_relation",
    "relation_matrix",
    "rigid",
    "simulates_player",
    "twisted",
    "GeneratorConfig",
    "SizeGuardError",
    "generate",
    "FIXTURE_NAMES",
    "fixture",
    "fixture_with_star_fill",
    "verify_fixtures",
    "__version__",
]

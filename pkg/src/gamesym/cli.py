"""Command-line front end.

One subcommand per analysis, each reading a game from a JSON file or the
built-in fixture catalog and writing either an aligned text table or JSON.
JSON output is canonical (sorted keys, fixed indentation, trailing newline)
so identical inputs produce identical bytes.

Exit codes: 0 success, 1 analysis-level conflict (strict-mode failures,
failed fixture verification), 2 input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .fixtures import FIXTURE_NAMES, fixture, verify_fixtures
from .game import Game, GameFormatError, format_rational, parse_game, serialize_game
from .oracle import MODES, GeneratorConfig, SizeGuardError, generate
from .permutation import perm_str
from .relations import (
    RELATION_NAMES,
    diagnostics,
    property_report,
    p_relation,
    q_relation,
    relation_matrix,
)
from .roles import all_roles, role_related, tr_equivalence_classes
from .symmetry import (
    AnonymousGame,
    anonymous_representation,
    classify,
    invariance_group,
    orbits,
)

ROLE_FLAVORS = {"Br": "B", "Tr": "T", "Mr": "M"}


class CliError(Exception):
    """Input-level failure; message goes to stderr, exit code is 2."""


def _fmt(x: Fraction) -> Any:
    return format_rational(x)


def _names(g: Game, profile: tuple[int, ...]) -> str:
    return g.profile_names(profile)


def _role_name(pair: tuple[int, int]) -> str:
    return f"r_{pair[0] + 1}^{pair[1] + 1}"


def _emit(payload: Any, fmt: str, table_renderer) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        table_renderer()


def _load_game(args: argparse.Namespace) -> Game:
    if getattr(args, "game", None) and getattr(args, "fixture", None):
        raise CliError("give either --game or --fixture, not both")
    if getattr(args, "fixture", None):
        try:
            return fixture(args.fixture)
        except KeyError as e:
            raise CliError(str(e.args[0])) from e
    if getattr(args, "game", None):
        try:
            with open(args.game, "rb") as fh:
                return parse_game(fh.read())
        except OSError as e:
            raise CliError(f"cannot read {args.game}: {e.strerror}") from e
        except GameFormatError as e:
            raise CliError(f"bad game file {args.game}: {e}") from e
    raise CliError("no input: give --game PATH or --fixture NAME")


def _parse_pair(text: str, n: int, count: int) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise CliError(f"--pair needs {count} comma-separated players, got {text!r}")
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise CliError(f"--pair needs integers, got {text!r}") from None
    for v in values:
        if not 1 <= v <= n:
            raise CliError(f"player {v} outside 1..{n}")
    return tuple(v - 1 for v in values)


def _pair_ce_payload(g: Game, ce) -> dict[str, Any]:
    return {
        "players": [ce.player_a + 1, ce.player_b + 1],
        "profiles": [_names(g, ce.profile_a), _names(g, ce.profile_b)],
        "payoffs": [_fmt(ce.payoff_a), _fmt(ce.payoff_b)],
    }


def _perm_ce_payload(g: Game, ce) -> dict[str, Any]:
    return {
        "permutation": perm_str(ce.sigma),
        "profile": _names(g, ce.profile),
        "player": ce.player + 1,
        "payoffs": [_fmt(ce.payoff_a), _fmt(ce.payoff_b)],
    }


def _role_ce_payload(g: Game, ce) -> dict[str, Any]:
    return {
        "profile": _names(g, ce.profile),
        "permutation": perm_str(ce.sigma),
        "payoffs": [_fmt(ce.payoff_left), _fmt(ce.payoff_right)],
    }


def cmd_classify(args: argparse.Namespace) -> int:
    g = _load_game(args)
    cls = classify(g)
    payload: dict[str, Any] = dict(cls.as_dict())
    ces: dict[str, Any] = {}
    for name, ce in cls.counterexamples.items():
        if hasattr(ce, "player_a"):
            ces[name] = _pair_ce_payload(g, ce)
        else:
            ces[name] = _perm_ce_payload(g, ce)
    if ces:
        payload["counterexamples"] = ces
    exit_code = 0
    if args.representation:
        rep = anonymous_representation(g)
        if isinstance(rep, AnonymousGame):
            payload["representation"] = {
                "players": rep.n,
                "utilities": [
                    {
                        rep.actions[x]: {
                            ",".join(map(str, counts)): _fmt(v)
                            for counts, v in sorted(per_action[x].items())
                        }
                        for x in range(len(rep.actions))
                    }
                    for per_action in rep.utilities
                ],
            }
        else:
            payload["representation"] = {
                "conflict": {
                    "player": rep.player + 1,
                    "profiles": [_names(g, rep.profile_a), _names(g, rep.profile_b)],
                    "payoffs": [_fmt(rep.payoff_a), _fmt(rep.payoff_b)],
                }
            }
            if args.strict:
                exit_code = 1

    def table() -> None:
        for name, value in cls.as_dict().items():
            print(f"{name:<16} {'yes' if value else 'no'}")
        for name, ce in ces.items():
            print(f"counterexample ({name}): {json.dumps(ce, sort_keys=True)}")
        rep_payload = payload.get("representation")
        if rep_payload is not None:
            if "conflict" in rep_payload:
                print(f"representation: impossible {json.dumps(rep_payload['conflict'], sort_keys=True)}")
            else:
                print("representation: per-count utilities available (use --format json)")

    _emit(payload, args.format, table)
    return exit_code


def cmd_group(args: argparse.Namespace) -> int:
    g = _load_game(args)
    members = invariance_group(g)
    payload = {"order": len(members), "members": [perm_str(s) for s in members]}

    def table() -> None:
        print(f"order {len(members)}")
        print(" ".join(payload["members"]))

    _emit(payload, args.format, table)
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    g = _load_game(args)
    parts = orbits(g)
    payload = {
        "classes": [
            {
                "image": list(img),
                "profiles": [_names(g, p) for p in cls_profiles],
            }
            for img, cls_profiles in zip(parts.images, parts.classes)
        ]
    }

    def table() -> None:
        for entry in payload["classes"]:
            counts = ",".join(map(str, entry["image"]))
            print(f"#({counts}): " + " ".join(f"({p})" for p in entry["profiles"]))

    _emit(payload, args.format, table)
    return 0


def _relation_witness_payload(g: Game, name: str, cell) -> Any:
    if name in ("B", "R"):
        return None
    if name == "T":
        return perm_str(cell.witness) if cell.witness is not None else None
    if name == "M":
        if cell.witness is None:
            return None
        return {_names(g, p): perm_str(s) for p, s in cell.witness.items()}
    if name.startswith("P"):
        return perm_str(cell.witness) if cell.witness is not None else None
    if cell.assignment is None:
        return None
    return {str(k + 1): l + 1 for k, l in cell.assignment.items()}


def _relation_ce_payload(g: Game, name: str, cell) -> Any:
    if name.startswith("P"):
        if not cell.failures:
            return None
        tau = next(iter(cell.failures))
        return {"candidate": perm_str(tau), **_role_ce_payload(g, cell.failures[tau])}
    if name.startswith("Q"):
        if cell.unmatched is not None:
            return {"unmatched_player": cell.unmatched + 1}
        if cell.diagonal.counterexample is not None:
            return {"diagonal": _role_ce_payload(g, cell.diagonal.counterexample)}
        return None
    if name == "M" and cell.counterexample is None and not cell.holds:
        return None
    if cell.counterexample is None:
        return None
    ce = cell.counterexample
    if isinstance(ce, tuple):
        return {"uncovered_profile": _names(g, ce)}
    return _role_ce_payload(g, ce)


def cmd_relations(args: argparse.Namespace) -> int:
    g = _load_game(args)
    name = args.relation
    if name not in RELATION_NAMES:
        raise CliError(f"unknown relation {name!r}, expected one of {RELATION_NAMES}")
    matrix = relation_matrix(g, name)
    pair = _parse_pair(args.pair, g.n, 2) if args.pair else None
    witnesses = {}
    counterexamples = {}
    for (i, j), cell in matrix.cells.items():
        key = f"{i + 1},{j + 1}"
        w = _relation_witness_payload(g, name, cell)
        if w is not None:
            witnesses[key] = w
        ce = _relation_ce_payload(g, name, cell)
        if ce is not None:
            counterexamples[key] = ce
    payload: dict[str, Any] = {
        "relation": name,
        "grid": matrix.grid(),
        "witnesses": witnesses,
        "counterexamples": counterexamples,
    }
    if pair is not None:
        key = f"{pair[0] + 1},{pair[1] + 1}"
        payload = {
            "relation": name,
            "pair": [pair[0] + 1, pair[1] + 1],
            "holds": matrix.holds(*pair),
            "witness": witnesses.get(key),
            "counterexample": counterexamples.get(key),
        }

    def table() -> None:
        if pair is not None:
            print(f"{pair[0] + 1} {name} {pair[1] + 1}: {'yes' if payload['holds'] else 'no'}")
            if payload.get("witness") is not None:
                print(f"witness: {json.dumps(payload['witness'], sort_keys=True)}")
            if payload.get("counterexample") is not None:
                print(f"counterexample: {json.dumps(payload['counterexample'], sort_keys=True)}")
            return
        header = "    " + " ".join(f"{j + 1:>2}" for j in range(g.n))
        print(f"{name} grid")
        print(header)
        for i in range(g.n):
            row = " ".join(" T" if matrix.holds(i, j) else " F" for j in range(g.n))
            print(f"{i + 1:>3} {row}")
        for key in sorted(witnesses):
            print(f"witness {key}: {json.dumps(witnesses[key], sort_keys=True)}")

    _emit(payload, args.format, table)
    return 0


def cmd_roles(args: argparse.Namespace) -> int:
    g = _load_game(args)
    if args.classes:
        classes = tr_equivalence_classes(g)
        payload = {
            "diagonal": [[_role_name(r) for r in cls] for cls in classes.diagonal],
            "off_diagonal": [[_role_name(r) for r in cls] for cls in classes.off_diagonal],
        }

        def table() -> None:
            for label in ("diagonal", "off_diagonal"):
                for cls in payload[label]:
                    print(f"{label}: " + " ".join(cls))

        _emit(payload, args.format, table)
        return 0
    if not args.pair:
        raise CliError("roles needs --pair i,j,k,l or --classes")
    flavor = ROLE_FLAVORS.get(args.relation or "")
    if flavor is None:
        raise CliError(f"--relation must be one of {tuple(ROLE_FLAVORS)}")
    i, j, k, l = _parse_pair(args.pair, g.n, 4)
    try:
        res = role_related(g, flavor, (i, j), (k, l))
    except ValueError as e:
        raise CliError(str(e)) from e
    payload: dict[str, Any] = {
        "left": _role_name((i, j)),
        "right": _role_name((k, l)),
        "relation": args.relation,
        "holds": res.holds,
    }
    if res.witness is not None:
        if flavor == "M":
            payload["witness"] = {_names(g, p): perm_str(s) for p, s in res.witness.items()}
        else:
            payload["witness"] = perm_str(res.witness)
    if res.counterexample is not None:
        ce = res.counterexample
        payload["counterexample"] = (
            {"uncovered_profile": _names(g, ce)} if isinstance(ce, tuple) else _role_ce_payload(g, ce)
        )

    def table() -> None:
        verdict = "yes" if res.holds else "no"
        print(f"{payload['left']} {args.relation} {payload['right']}: {verdict}")
        for key in ("witness", "counterexample"):
            if key in payload:
                print(f"{key}: {json.dumps(payload[key], sort_keys=True)}")

    _emit(payload, args.format, table)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    g = _load_game(args)
    cls = classify(g, certificates=False)
    props = property_report(g)
    diag = diagnostics(g)
    payload = {
        "classification": cls.as_dict(),
        "properties": {
            rel: {
                prop: {
                    "holds": verdict.holds,
                    "counterexample": _property_ce_payload(verdict.counterexample),
                }
                for prop, verdict in by_prop.items()
            }
            for rel, by_prop in props.entries.items()
        },
        "diagnostics": {
            "ok": diag.ok,
            "entries": [{"name": e.name, "ok": e.ok, "detail": e.detail} for e in diag.entries],
            "observations": [
                {"name": e.name, "value": e.ok, "detail": e.detail} for e in diag.observations
            ],
        },
    }

    def table() -> None:
        print("classification")
        for name, value in cls.as_dict().items():
            print(f"  {name:<16} {'yes' if value else 'no'}")
        print("relation properties")
        for rel, by_prop in props.entries.items():
            line = "  ".join(
                f"{prop}={'yes' if verdict.holds else 'no'}" for prop, verdict in by_prop.items()
            )
            print(f"  {rel:<3} {line}")
        print(f"diagnostics {'ok' if diag.ok else 'FAILED'}")
        for e in diag.entries:
            if not e.ok:
                print(f"  FAILED {e.name}: {e.detail}")
        for e in diag.observations:
            print(f"  note {e.name}: {e.ok} ({e.detail})")

    _emit(payload, args.format, table)
    return 0


def _property_ce_payload(ce) -> Any:
    if ce is None:
        return None
    out = []
    for item in ce:
        if isinstance(item, tuple):
            out.append(_role_name(item))
        else:
            out.append(item + 1)
    return out


def cmd_fixture(args: argparse.Namespace) -> int:
    try:
        g = fixture(args.name)
    except KeyError as e:
        raise CliError(str(e.args[0])) from e
    data = serialize_game(g)
    if args.emit:
        with open(args.emit, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        config = GeneratorConfig(
            n=args.n, s=args.s, seed=args.seed, lo=args.lo, hi=args.hi, mode=args.mode
        )
    except SizeGuardError as e:
        raise CliError(str(e)) from e
    g = generate(config)
    data = serialize_game(g, meta=config.describe())
    if args.emit:
        with open(args.emit, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_fixtures()
    if args.format == "json":
        payload = {
            "ok": report.ok,
            "assertions": [
                {
                    "fixture": a.fixture,
                    "description": a.description,
                    "passed": a.passed,
                    "source": a.source,
                    "detail": a.detail,
                }
                for a in report.assertions
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for a in report.assertions:
            status = "PASS" if a.passed else "FAIL"
            marker = "" if a.source == "catalog" else "  [computed]"
            print(f"{status}  {a.fixture}: {a.description}{marker}")
        passed = sum(1 for a in report.assertions if a.passed)
        print(f"{passed}/{len(report.assertions)} assertions passed")
    return 0 if report.ok else 1


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--game", help="path to a game JSON file")
    sub.add_argument("--fixture", help=f"built-in game, one of {', '.join(FIXTURE_NAMES)}")
    sub.add_argument("--format", choices=("table", "json"), default="table")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamesym",
        description="Analyze structural symmetries among the players of a finite game.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="five symmetry predicates, with counterexamples")
    _add_input_flags(p)
    p.add_argument("--representation", action="store_true",
                   help="also attempt the per-count compressed form")
    p.add_argument("--strict", action="store_true",
                   help="exit 1 when a requested representation is impossible")
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("group", help="payoff-preserving permutations")
    _add_input_flags(p)
    p.set_defaults(func=cmd_group)

    p = subs.add_parser("orbits", help="profiles grouped by occupancy counts")
    _add_input_flags(p)
    p.set_defaults(func=cmd_orbits)

    p = subs.add_parser("relations", help="pairwise player relation grid")
    _add_input_flags(p)
    p.add_argument("--relation", required=True, help="one of " + ", ".join(RELATION_NAMES))
    p.add_argument("--pair", help="single cell, 1-based: i,j")
    p.set_defaults(func=cmd_relations)

    p = subs.add_parser("roles", help="role-level relation between two roles")
    _add_input_flags(p)
    p.add_argument("--pair", help="roles r_i^j and r_k^l, 1-based: i,j,k,l")
    p.add_argument("--relation", help="one of Br, Tr, Mr")
    p.add_argument("--classes", action="store_true",
                   help="print equivalence classes of twisted-related roles")
    p.set_defaults(func=cmd_roles)

    p = subs.add_parser("report", help="classification, relation properties, diagnostics")
    _add_input_flags(p)
    p.set_defaults(func=cmd_report)

    p = subs.add_parser("fixture", help="write a built-in game as JSON")
    p.add_argument("name", help=f"one of {', '.join(FIXTURE_NAMES)}")
    p.add_argument("--emit", help="write to this path instead of standard output")
    p.set_defaults(func=cmd_fixture)

    p = subs.add_parser("generate", help="seeded random game")
    p.add_argument("--n", type=int, required=True, help="players")
    p.add_argument("--s", type=int, required=True, help="actions per player")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="general")
    p.add_argument("--lo", type=int, default=-9)
    p.add_argument("--hi", type=int, default=9)
    p.add_argument("--emit", help="write to this path instead of standard output")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("verify", help="re-derive every cataloged fixture verdict")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"gamesym: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())

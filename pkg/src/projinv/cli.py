"""Command-line interface.

Exit codes: 0 success / equivalent, 1 not equivalent, 2 degenerate input,
3 parse or I/O error (including bad flags), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .cross_invariants import (
    ENUMERATION_LIMIT,
    DEFAULT_SAMPLES,
    _c_from_brackets,
    relation_residuals,
    summarize_residuals,
)
from .errors import (
    DegenerateDenominator,
    DegenerateInput,
    ParseError,
    ProjInvError,
    ResamplingExhausted,
    ThreeCollinear,
    TooFewPoints,
)
from .fingerprint import fingerprint
from .five_point_signature import esym_signature, subset_signature
from .generate import random_generic_config
from .matcher import brute_force_match, match_configs, verify_match
from .projective_maps import ProjMap, labeled_equivalent
from .scalar_geometry import BracketTable, Configuration
from .serialization import config_to_obj, format_rational, load
from .subset_distributions import demo_translation

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_DEGENERATE = 2
EXIT_PARSE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _map_obj(g: ProjMap) -> list[list[str]]:
    return [[str(x) for x in row] for row in g.matrix]


def _emit(obj, plain: bool) -> None:
    if plain:
        for line in _plain_lines(obj):
            print(line)
    else:
        print(json.dumps(obj))


def _plain_lines(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _plain_lines(v, f"{prefix}{k}." if isinstance(v, (dict, list)) else f"{prefix}{k}")
    elif isinstance(obj, list) and all(not isinstance(v, (dict, list)) for v in obj):
        yield f"{prefix.rstrip('.')} {' '.join('null' if v is None else str(v) for v in obj)}"
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _plain_lines(v, f"{prefix}{i}.")
    else:
        yield f"{prefix} {'null' if obj is None else str(obj).lower() if isinstance(obj, bool) else obj}"


def _parse_subset(text: str) -> tuple[int, ...]:
    try:
        labels = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--subset expects 5 comma-separated labels, got {text!r}") from None
    if len(labels) != 5:
        raise UsageError(f"--subset expects 5 comma-separated labels, got {text!r}")
    return labels


def _invariant_record(config: Configuration, br: BracketTable, labels, mode: str) -> dict:
    s1, s2, s3, s4, s5 = labels
    X = _c_from_brackets(br, s1, s2, s3, s4, s5)
    Y = _c_from_brackets(br, s2, s1, s3, s4, s5)
    if mode == "esym":
        sig = esym_signature(config.subconfig(labels))
    else:
        sig = subset_signature(config, labels, br)
    return {
        "subset": list(labels),
        "X": format_rational(X),
        "Y": format_rational(Y),
        "mode": sig.mode.value,
        "a": format_rational(sig.a),
        "b": format_rational(sig.b),
    }


def cmd_invariants(args) -> int:
    config = load(args.input)
    if args.subset is not None:
        labels = _parse_subset(args.subset)
        for x in labels:
            if not 1 <= x <= config.n:
                raise UsageError(f"--subset label {x} out of range 1..{config.n}")
        if len(set(labels)) != 5:
            raise UsageError("--subset labels must be distinct")
        subsets = [labels]
    else:
        if config.n < 5:
            raise DegenerateInput("invariants need at least 5 points")
        from itertools import combinations

        subsets = list(combinations(config.labels, 5))
    br = BracketTable(config)
    records = [_invariant_record(config, br, s, args.mode) for s in subsets]
    _emit(records[0] if args.subset is not None else {"n": config.n, "subsets": records}, args.plain)
    return EXIT_OK


def cmd_fingerprint(args) -> int:
    config = load(args.input)
    fp = fingerprint(config, workers=args.workers)
    if args.hash:
        print(fp.digest())
    elif args.json:
        print(json.dumps({
            "n": fp.n,
            "entries": [[format_rational(a), format_rational(b)] for a, b in fp.entries],
            "sha256": fp.digest(),
        }))
    else:
        sys.stdout.write(fp.serialize())
    return EXIT_OK


def cmd_compare(args) -> int:
    P, Q = load(args.a), load(args.b)
    if P.n != Q.n:
        _emit({"equivalent": False}, args.plain)
        return EXIT_NOT_EQUIVALENT
    if args.labeled:
        g = labeled_equivalent(P, Q)
        if g is None:
            _emit({"equivalent": False}, args.plain)
            return EXIT_NOT_EQUIVALENT
        _emit({"equivalent": True, "map": _map_obj(g)}, args.plain)
        return EXIT_OK
    return _report_match(P, Q, match_configs(P, Q), args.plain)


def _report_match(P, Q, result, plain) -> int:
    if result is None:
        _emit({"equivalent": False}, plain)
        return EXIT_NOT_EQUIVALENT
    if not verify_match(P, Q, result):
        print("internal error: returned witness failed verification", file=sys.stderr)
        return EXIT_INTERNAL
    _emit({"equivalent": True, "perm": list(result.perm), "map": _map_obj(result.map)}, plain)
    return EXIT_OK


def cmd_match(args) -> int:
    P, Q = load(args.a), load(args.b)
    result = brute_force_match(P, Q) if args.brute_force else match_configs(P, Q)
    return _report_match(P, Q, result, args.plain)


def cmd_verify_relations(args) -> int:
    config = load(args.input)
    if config.n < 5:
        raise DegenerateInput("relations need at least 5 points")
    sample = args.sample
    residuals = relation_residuals(config, sample=sample, seed=args.seed)
    summary = summarize_residuals(residuals)
    sampled = sample is not None or config.n > ENUMERATION_LIMIT
    ok = all(s["max_abs_residual"] == 0 for s in summary.values())
    _emit({
        "n": config.n,
        "mode": "sampled" if sampled else "enumerated",
        "samples_per_family": (sample or DEFAULT_SAMPLES) if sampled else None,
        "families": {
            f: {"instances": s["instances"], "max_abs_residual": format_rational(s["max_abs_residual"])}
            for f, s in summary.items()
        },
        "ok": ok,
    }, args.plain)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_gen_random(args) -> int:
    config = random_generic_config(args.n, args.seed, args.bound)
    text = json.dumps(config_to_obj(config))
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise ParseError(f"cannot write {args.output}: {exc}") from exc
    else:
        print(text)
    return EXIT_OK


def cmd_demo_translation(args) -> int:
    report = demo_translation(args.n, args.seed)
    _emit(report, args.plain)
    return EXIT_OK if report["ok"] else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="projinv", description="Exact projective invariants of planar point configurations.")
    parser.add_argument("--version", action="version", version=f"projinv {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--plain", action="store_true", help="plain text instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="X, Y, a, b of 5-subsets")
    p.add_argument("--input", required=True)
    p.add_argument("--subset", help="five comma-separated labels, e.g. 1,2,3,4,5")
    p.add_argument("--mode", choices=("power", "esym"), default="power")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("fingerprint", parents=[common], help="sorted (a,b) multiset over 5-subsets")
    p.add_argument("--input", required=True)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--hash", action="store_true", help="print the SHA-256 of the serialization")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_fingerprint)

    p = sub.add_parser("compare", parents=[common], help="decide projective equivalence")
    p.add_argument("--labeled", action="store_true", help="keep labels fixed")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("match", parents=[common], help="find relabeling and map")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("verify-relations", parents=[common], help="check the relation families")
    p.add_argument("--input", required=True)
    p.add_argument("--sample", type=int, help="random instances per family instead of enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_relations)

    p = sub.add_parser("gen-random", parents=[common], help="seeded generic configuration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("demo-translation", parents=[common], help="1-D translation reconstruction demo")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_demo_translation)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DegenerateDenominator, DegenerateInput, ThreeCollinear, TooFewPoints, ResamplingExhausted) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ProjInvError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


def main() -> None:
    sys.exit(run())

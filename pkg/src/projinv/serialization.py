"""JSON exchange format for configurations.

    {"n": 3, "points": [["1", "0", "0"], ["0", "1/2", "0"], ["-3", "2", "7"]]}

Rationals are strings: a decimal integer, optionally followed by ``/den``
with a positive denominator. Written points use their canonical primitive
integer coordinates.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .scalar_geometry import Configuration, ProjPoint

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text.strip()):
        raise ParseError(f"not an exact rational string: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def config_from_obj(obj) -> Configuration:
    if not isinstance(obj, dict) or "points" not in obj:
        raise ParseError("configuration must be an object with a 'points' list")
    rows = obj["points"]
    if not isinstance(rows, list) or not rows:
        raise ParseError("'points' must be a non-empty list")
    points = []
    for idx, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError(f"point {idx} must be a list of 3 rational strings")
        coords = [parse_rational(x) for x in row]
        if all(c == 0 for c in coords):
            raise ParseError(f"point {idx} is (0,0,0), which is not a projective point")
        points.append(ProjPoint(*coords))
    if "n" in obj and obj["n"] != len(points):
        raise ParseError(f"'n' is {obj['n']!r} but {len(points)} points were given")
    return Configuration(tuple(points))


def config_to_obj(config: Configuration) -> dict:
    return {"n": config.n, "points": [[str(c) for c in p.coords] for p in config.points]}


def loads(text: str) -> Configuration:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return config_from_obj(obj)


def dumps(config: Configuration) -> str:
    return json.dumps(config_to_obj(config))


def load(path) -> Configuration:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def dump(config: Configuration, path) -> None:
    Path(path).write_text(dumps(config) + "\n")

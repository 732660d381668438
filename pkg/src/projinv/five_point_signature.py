"""Relabeling- and projectively-invariant signature (a, b) of five points.

``a`` and ``b`` are the sums of the squares and fourth powers of the
c-invariants over all 120 orderings of the five points. Every c-value of a
5-point configuration is one of 30 rational functions of
X = c(1,2,3,4,5) and Y = c(2,1,3,4,5), and each of the 30 distinct values
occurs for exactly 4 orderings, so a = 4 * sum(f^2) over those functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .cross_invariants import _c_from_brackets, all_c_values
from .errors import DegenerateDenominator
from .scalar_geometry import BracketTable, Configuration

ORBIT_SIZE = 4


class Mode(str, enum.Enum):
    POWER_SUM = "power_sum"
    ELEM_SYM = "elem_sym"


@dataclass(frozen=True, order=True)
class Signature:
    a: Fraction
    b: Fraction
    mode: Mode = Mode.POWER_SUM

    def pair(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)


def _div(num: Fraction, den: Fraction, name: str) -> Fraction:
    if den == 0:
        raise DegenerateDenominator(f"{name} is undefined: zero denominator")
    return num / den


# (name template, function of f) for the six-element closure of each base function
_CLOSURE = (
    ("{f}", lambda f, n: f),
    ("1/({f})", lambda f, n: _div(Fraction(1), f, n)),
    ("1-({f})", lambda f, n: 1 - f),
    ("1/(1-({f}))", lambda f, n: _div(Fraction(1), 1 - f, n)),
    ("(({f})-1)/({f})", lambda f, n: _div(f - 1, f, n)),
    ("({f})/(({f})-1)", lambda f, n: _div(f, f - 1, n)),
)


def m_values(X, Y) -> list[Fraction]:
    """The 30 functions of the closed set evaluated at (X, Y), duplicates kept."""
    X, Y = Fraction(X), Fraction(Y)
    base = [
        ("X", X),
        ("Y", Y),
        ("X/Y", _div(X, Y, "X/Y")),
        ("(X-1)/(Y-1)", _div(X - 1, Y - 1, "(X-1)/(Y-1)")),
        ("X(1-Y)/(X-Y)", _div(X * (1 - Y), X - Y, "X(1-Y)/(X-Y)")),
    ]
    out = []
    for base_name, f in base:
        for template, fn in _CLOSURE:
            out.append(fn(f, template.format(f=base_name)))
    return out


def _power_sums(values, weight: int) -> tuple[Fraction, Fraction]:
    a = b = Fraction(0)
    for v in values:
        sq = v * v
        a += sq
        b += sq * sq
    return weight * a, weight * b


def signature_from_xy(X, Y) -> Signature:
    a, b = _power_sums(m_values(X, Y), ORBIT_SIZE)
    return Signature(a, b)


def _require_five(config: Configuration) -> None:
    if config.n != 5:
        raise ValueError(f"expected a 5-point configuration, got {config.n} points")


def signature_direct(config: Configuration) -> Signature:
    """Power sums over all 120 ordered index tuples, each evaluated from brackets."""
    _require_five(config)
    br = BracketTable(config)
    return Signature(*_power_sums((_c_from_brackets(br, *t) for t in permutations(range(1, 6))), 1))


def signature(config: Configuration) -> Signature:
    """Fast path through (X, Y); falls back to the direct sum when an auxiliary
    denominator of the closed set vanishes but the c-values themselves are defined."""
    _require_five(config)
    br = BracketTable(config)
    return _signature_labels(br, (1, 2, 3, 4, 5))


def _signature_labels(br: BracketTable, labels: Sequence[int]) -> Signature:
    s1, s2, s3, s4, s5 = labels
    X = _c_from_brackets(br, s1, s2, s3, s4, s5)
    Y = _c_from_brackets(br, s2, s1, s3, s4, s5)
    try:
        return signature_from_xy(X, Y)
    except DegenerateDenominator:
        vals = (_c_from_brackets(br, *t) for t in permutations(labels))
        return Signature(*_power_sums(vals, 1))


def subset_signature(config: Configuration, labels: Sequence[int], br: BracketTable | None = None) -> Signature:
    """Signature of the 5 points with the given labels, in the given order."""
    if len(labels) != 5 or len(set(labels)) != 5:
        raise ValueError(f"need 5 distinct labels, got {tuple(labels)}")
    if br is None:
        br = BracketTable(config)
    return _signature_labels(br, labels)


def elementary_symmetric(values, max_degree: int) -> list[Fraction]:
    """e_0 .. e_max_degree of the given values."""
    e = [Fraction(1)] + [Fraction(0)] * max_degree
    for v in values:
        for d in range(max_degree, 0, -1):
            e[d] += e[d - 1] * v
    return e


def esym_signature(config: Configuration) -> Signature:
    """(e2, e4) of the 30 canonical c-values."""
    _require_five(config)
    e = elementary_symmetric(all_c_values(config).values.values(), 4)
    return Signature(e[2], e[4], Mode.ELEM_SYM)

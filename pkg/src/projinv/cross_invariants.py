"""The five-index cross invariants c(i,j,k,l,m) and their relation families.

    c(i,j,k,l,m) = [i,j,k][i,l,m] / ([i,j,l][i,k,m])

Each value is shared by the four index tuples
(i,j,k,l,m), (i,k,j,m,l), (i,l,m,j,k), (i,m,l,k,j); the canonical member is
the one whose second index is the minimum of the last four.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator, NamedTuple

from .errors import DegenerateDenominator
from .scalar_geometry import BracketTable, Configuration, _check_labels

FAMILIES = ("equal", "inverses", "sum1", "triad5", "triad6")

# above this size the verifier samples instead of enumerating
ENUMERATION_LIMIT = 7
DEFAULT_SAMPLES = 10_000


class CIndex(NamedTuple):
    i: int
    j: int
    k: int
    l: int
    m: int


def orbit(i: int, j: int, k: int, l: int, m: int) -> tuple[CIndex, ...]:
    """The four index tuples naming the same invariant."""
    return (
        CIndex(i, j, k, l, m),
        CIndex(i, k, j, m, l),
        CIndex(i, l, m, j, k),
        CIndex(i, m, l, k, j),
    )


def canonical_cindex(i: int, j: int, k: int, l: int, m: int) -> CIndex:
    if len({i, j, k, l, m}) != 5:
        raise IndexError(f"indices must be pairwise distinct, got {(i, j, k, l, m)}")
    low = min(j, k, l, m)
    if low == j:
        return CIndex(i, j, k, l, m)
    if low == k:
        return CIndex(i, k, j, m, l)
    if low == l:
        return CIndex(i, l, m, j, k)
    return CIndex(i, m, l, k, j)


def canonical_indices(labels) -> Iterator[CIndex]:
    """All canonical indices with entries drawn from ``labels`` (ascending order)."""
    for t in permutations(sorted(labels), 5):
        if t[1] == min(t[1:]):
            yield CIndex(*t)


def expected_table_size(n: int) -> int:
    if n < 5:
        return 0
    return n * (n - 1) * (n - 2) * (n - 3) * (n - 4) // 4


def _c_from_brackets(br: Callable[[int, int, int], int], i, j, k, l, m) -> Fraction:
    den = br(i, j, l) * br(i, k, m)
    if den == 0:
        raise DegenerateDenominator(
            f"c{(i, j, k, l, m)}: bracket [{i},{j},{l}] or [{i},{k},{m}] vanishes"
        )
    return Fraction(br(i, j, k) * br(i, l, m), den)


def c_value(config: Configuration, i: int, j: int, k: int, l: int, m: int) -> Fraction:
    _check_labels(config, (i, j, k, l, m))
    return _c_from_brackets(BracketTable(config), i, j, k, l, m)


@dataclass(frozen=True)
class CTable:
    """Exact values of every canonical c-invariant of a configuration."""

    n: int
    values: dict[CIndex, Fraction]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index) -> Fraction:
        """Look up any index tuple, canonical or not."""
        return self.values[canonical_cindex(*index)]

    def __iter__(self):
        return iter(self.values)

    def items(self):
        return self.values.items()

    def with_entry(self, index, value: Fraction) -> "CTable":
        vals = dict(self.values)
        vals[canonical_cindex(*index)] = Fraction(value)
        return CTable(self.n, vals)


def all_c_values(config: Configuration) -> CTable:
    """Table of all canonical c-invariants; empty for fewer than five points."""
    br = BracketTable(config)
    vals = {idx: _c_from_brackets(br, *idx) for idx in canonical_indices(config.labels)}
    return CTable(config.n, vals)


def generic_distinctness(ctable: CTable) -> bool:
    """True iff no two canonical indices share a value."""
    return len(set(ctable.values.values())) == len(ctable)


@dataclass(frozen=True)
class Residual:
    family: str
    index: tuple[int, ...]
    value: Fraction


def family_instance_count(family: str, n: int) -> int:
    """Number of instances of a relation family when fully enumerated."""
    ordered5 = 0 if n < 5 else n * (n - 1) * (n - 2) * (n - 3) * (n - 4)
    if family == "equal":
        return 3 * ordered5
    if family in ("inverses", "sum1", "triad5"):
        return ordered5
    if family == "triad6":
        return ordered5 * (n - 5) if n >= 6 else 0
    raise KeyError(family)


def _family_residuals(family: str, t: tuple[int, ...], C, direct) -> list[Residual]:
    if family == "equal":
        i, j, k, l, m = t
        base = C(t)
        # lhs comes straight from brackets so that the table itself is under test
        return [
            Residual("equal", t + (slot,), direct(other) - base)
            for slot, other in enumerate(orbit(i, j, k, l, m)[1:], start=1)
        ]
    if family == "inverses":
        i, j, k, l, m = t
        return [Residual(family, t, C(t) * C((i, j, l, k, m)) - 1)]
    if family == "sum1":
        i, j, k, l, m = t
        return [Residual(family, t, C(t) + C((i, j, m, l, k)) - 1)]
    if family == "triad5":
        i, j, k, l, m = t
        return [Residual(family, t, C(t) - C((m, j, k, l, i)) * C((j, i, k, l, m)))]
    if family == "triad6":
        i, j, k, l, m, r = t
        return [Residual(family, t, C(t[:5]) - C((i, r, k, l, m)) * C((i, j, k, l, r)))]
    raise KeyError(family)


def _instances(family: str, n: int, sample: int | None, rng: random.Random):
    width = 6 if family == "triad6" else 5
    if n < width:
        return
    labels = range(1, n + 1)
    if sample is None:
        yield from permutations(labels, width)
        return
    for _ in range(sample):
        yield tuple(rng.sample(labels, width))


def relation_residuals(
    config: Configuration,
    table: CTable | None = None,
    *,
    sample: int | None = None,
    seed: int = 0,
) -> list[Residual]:
    """Evaluate every relation family on ``table`` (default: the config's own table).

    Configurations with more than ENUMERATION_LIMIT points are checked on
    ``sample`` (default DEFAULT_SAMPLES) random instances per family; pass
    ``sample`` explicitly to force sampling at any size.
    """
    if table is None:
        table = all_c_values(config)
    if sample is None and config.n > ENUMERATION_LIMIT:
        sample = DEFAULT_SAMPLES
    br = BracketTable(config)
    values = table.values

    def C(t):
        return values[canonical_cindex(*t)]

    def direct(t):
        return _c_from_brackets(br, *t)

    rng = random.Random(seed)
    out: list[Residual] = []
    for family in FAMILIES:
        for t in _instances(family, config.n, sample, rng):
            out.extend(_family_residuals(family, t, C, direct))
    return out


def summarize_residuals(residuals: list[Residual]) -> dict[str, dict]:
    """Per-family instance count and maximum absolute residual."""
    summary = {f: {"instances": 0, "max_abs_residual": Fraction(0)} for f in FAMILIES}
    for r in residuals:
        s = summary[r.family]
        s["instances"] += 1
        if abs(r.value) > s["max_abs_residual"]:
            s["max_abs_residual"] = abs(r.value)
    return summary


"""Fingerprint of a configuration: the sorted multiset of 5-subset signatures.

Serialization (the input of the hash) is ``n`` on the first line followed by
one ``a_num/a_den,b_num/b_den`` line per subset in canonical order, every line
terminated by ``\\n``. The hash is the SHA-256 hex digest of the UTF-8 bytes.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DegenerateDenominator
from .five_point_signature import Signature, subset_signature
from .projective_maps import general_position_quadruple
from .scalar_geometry import BracketTable, Configuration, no_three_collinear, points_distinct

Pair = tuple[Fraction, Fraction]


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Fingerprint:
    n: int
    entries: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def serialize(self) -> str:
        lines = [str(self.n)]
        lines += [f"{format_fraction(a)},{format_fraction(b)}" for a, b in self.entries]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode("utf-8")).hexdigest()

    def __hash__(self) -> int:
        return hash(self.serialize())

    def multiplicity(self, pair: Pair) -> int:
        return self.entries.count(pair)


def subset_signatures(config: Configuration) -> dict[tuple[int, ...], Signature]:
    """Signature of every 5-subset, keyed by its ascending label tuple."""
    br = BracketTable(config)
    out = {}
    for labels in combinations(config.labels, 5):
        try:
            out[labels] = subset_signature(config, labels, br)
        except DegenerateDenominator as exc:
            raise DegenerateDenominator(f"5-subset {labels}: {exc}") from exc
    return out


def _chunk_signatures(args):
    config, chunk = args
    br = BracketTable(config)
    return [subset_signature(config, s, br).pair() for s in chunk]


def fingerprint(config: Configuration, workers: int = 1) -> Fingerprint:
    """Sorted (a, b) pairs over all 5-subsets; empty for fewer than five points.

    With ``workers > 1`` subsets are split across processes; the result does
    not depend on the worker count.
    """
    if config.n < 5:
        return Fingerprint(config.n, ())
    if workers <= 1:
        pairs = [s.pair() for s in subset_signatures(config).values()]
        return Fingerprint(config.n, tuple(pairs))
    subsets = list(combinations(config.labels, 5))
    size = -(-len(subsets) // workers)
    chunks = [(config, subsets[i : i + size]) for i in range(0, len(subsets), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pairs = [p for part in pool.map(_chunk_signatures, chunks) for p in part]
    return Fingerprint(config.n, tuple(pairs))


def fingerprints_equal(f1: Fingerprint, f2: Fingerprint) -> bool:
    return f1.n == f2.n and f1.entries == f2.entries


@dataclass(frozen=True)
class GenericityReport:
    points_distinct: bool
    no_three_collinear: bool
    subset_signatures_distinct: bool
    frame_exists: bool

    def all(self) -> bool:
        return (
            self.points_distinct
            and self.no_three_collinear
            and self.subset_signatures_distinct
            and self.frame_exists
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "points_distinct": self.points_distinct,
            "no_three_collinear": self.no_three_collinear,
            "subset_signatures_distinct": self.subset_signatures_distinct,
            "frame_exists": self.frame_exists,
        }


def genericity_report(config: Configuration) -> GenericityReport:
    distinct = points_distinct(config)
    ntc = no_three_collinear(config)
    if config.n < 5:
        sigs_distinct = True
    elif not ntc:
        sigs_distinct = False
    else:
        try:
            sigs = [s.pair() for s in subset_signatures(config).values()]
            sigs_distinct = len(set(sigs)) == len(sigs)
        except DegenerateDenominator:
            sigs_distinct = False
    frame = config.n >= 4 and general_position_quadruple(config) is not None
    return GenericityReport(distinct, ntc, sigs_distinct, frame)


def expected_fingerprint_size(n: int) -> int:
    return comb(n, 5)

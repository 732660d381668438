"""Exact projective points, labeled configurations and bracket determinants.

All scalars are :class:`fractions.Fraction`; points are stored as primitive
integer triples so that equality and hashing are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")
    return Fraction(value)


def primitive_integer_vector(values: Sequence[RationalLike]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    fracs = [as_rational(v) for v in values]
    if all(f == 0 for f in fracs):
        raise ValueError("the zero vector has no projective class")
    den = lcm(*(f.denominator for f in fracs))
    ints = [f.numerator * (den // f.denominator) for f in fracs]
    g = gcd(*ints)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


class ProjPoint:
    """A point of the projective plane in canonical homogeneous coordinates.

    ``ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3) == ProjPoint("1/3", "2/3", 1)``.
    """

    __slots__ = ("coords",)

    coords: tuple[int, int, int]

    def __init__(self, x: RationalLike, y: RationalLike, z: RationalLike):
        object.__setattr__(self, "coords", primitive_integer_vector((x, y, z)))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __reduce__(self):
        return (ProjPoint, self.coords)

    @classmethod
    def from_vector(cls, v: Sequence[RationalLike]) -> "ProjPoint":
        if len(v) != 3:
            raise ValueError(f"expected 3 homogeneous coordinates, got {len(v)}")
        return cls(*v)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, idx: int) -> int:
        return self.coords[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(("ProjPoint", self.coords))

    def __lt__(self, other: "ProjPoint") -> bool:
        return self.coords < other.coords

    def __repr__(self) -> str:
        x, y, z = self.coords
        return f"ProjPoint({x}:{y}:{z})"


@dataclass(frozen=True)
class Configuration:
    """An ordered list of projective points; labels are 1-based positions."""

    points: tuple[ProjPoint, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        for p in pts:
            if not isinstance(p, ProjPoint):
                raise TypeError(f"expected ProjPoint, got {type(p).__name__}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_coords(cls, rows: Iterable[Sequence[RationalLike]]) -> "Configuration":
        return cls(tuple(ProjPoint.from_vector(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, label: int) -> ProjPoint:
        """Point with the given 1-based label."""
        if not isinstance(label, int) or not 1 <= label <= self.n:
            raise IndexError(f"label {label!r} out of range 1..{self.n}")
        return self.points[label - 1]

    def relabeled(self, perm: Sequence[int]) -> "Configuration":
        """Configuration whose i-th point is ``self[perm[i-1]]``."""
        if sorted(perm) != list(self.labels):
            raise ValueError(f"{perm!r} is not a permutation of 1..{self.n}")
        return Configuration(tuple(self[p] for p in perm))

    def subconfig(self, labels: Sequence[int]) -> "Configuration":
        return Configuration(tuple(self[x] for x in labels))

    def coords(self) -> list[tuple[int, int, int]]:
        return [p.coords for p in self.points]


def det3(a: Sequence, b: Sequence, c: Sequence):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _check_labels(config: Configuration, labels: Sequence[int]) -> None:
    for x in labels:
        if not isinstance(x, int) or not 1 <= x <= config.n:
            raise IndexError(f"label {x!r} out of range 1..{config.n}")
    if len(set(labels)) != len(labels):
        raise IndexError(f"labels must be pairwise distinct, got {tuple(labels)}")


def bracket(config: Configuration, i: int, j: int, k: int) -> Fraction:
    """Determinant of the canonical coordinate rows of points i, j, k."""
    _check_labels(config, (i, j, k))
    return Fraction(det3(config[i].coords, config[j].coords, config[k].coords))


class BracketTable:
    """All brackets of a configuration, computed once and looked up with sign."""

    def __init__(self, config: Configuration):
        self.config = config
        pts = [p.coords for p in config.points]
        self._dets: dict[tuple[int, int, int], int] = {
            (i + 1, j + 1, k + 1): det3(pts[i], pts[j], pts[k])
            for i, j, k in combinations(range(config.n), 3)
        }

    def __call__(self, i: int, j: int, k: int) -> int:
        # sort the triple, tracking the permutation parity
        sign = 1
        if i > j:
            i, j, sign = j, i, -sign
        if j > k:
            j, k, sign = k, j, -sign
        if i > j:
            i, j, sign = j, i, -sign
        if i == j or j == k:
            raise IndexError("labels must be pairwise distinct")
        try:
            return sign * self._dets[(i, j, k)]
        except KeyError:
            raise IndexError(f"labels out of range 1..{self.config.n}") from None

    def nonzero(self) -> bool:
        return all(d != 0 for d in self._dets.values())


def no_three_collinear(config: Configuration) -> bool:
    return BracketTable(config).nonzero()


def points_distinct(config: Configuration) -> bool:
    return len(set(config.points)) == config.n

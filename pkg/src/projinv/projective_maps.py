"""Elements of PGL(3) over the rationals, frame maps and labeled equivalence."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .errors import DegenerateInput, ThreeCollinear
from .scalar_geometry import (
    Configuration,
    ProjPoint,
    RationalLike,
    det3,
    primitive_integer_vector,
)

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def _matmul(a, b):
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(3)) for c in range(3)) for r in range(3)
    )


def _adjugate(m):
    """Adjugate matrix; equals det(m) * inverse(m)."""
    cof = [[0] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            r1, r2 = [x for x in range(3) if x != r]
            c1, c2 = [x for x in range(3) if x != c]
            minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]
            cof[r][c] = minor if (r + c) % 2 == 0 else -minor
    return tuple(tuple(cof[c][r] for c in range(3)) for r in range(3))


class ProjMap:
    """An invertible 3x3 matrix modulo nonzero scalars.

    Stored as a primitive integer matrix whose first nonzero entry
    (row-major) is positive, so ``==`` is equality in PGL(3).
    """

    __slots__ = ("matrix",)

    matrix: Matrix

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("a projective map needs a 3x3 matrix")
        flat = primitive_integer_vector([x for r in rows for x in r])
        m = (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))
        if det3(*m) == 0:
            raise ValueError("singular matrix does not define a projective map")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("ProjMap is immutable")

    def __reduce__(self):
        return (ProjMap, (self.matrix,))

    @classmethod
    def identity(cls) -> "ProjMap":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def diagonal(cls, a, b, c) -> "ProjMap":
        return cls(((a, 0, 0), (0, b, 0), (0, 0, c)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(("ProjMap", self.matrix))

    def __repr__(self) -> str:
        return f"ProjMap({[list(r) for r in self.matrix]})"

    def __call__(self, point: ProjPoint) -> ProjPoint:
        return apply(self, point)

    def __matmul__(self, other: "ProjMap") -> "ProjMap":
        return compose(self, other)

    def determinant(self) -> int:
        return det3(*self.matrix)


def apply(g: ProjMap, point: ProjPoint) -> ProjPoint:
    v = point.coords
    return ProjPoint(*(sum(row[t] * v[t] for t in range(3)) for row in g.matrix))


def compose(m1: ProjMap, m2: ProjMap) -> ProjMap:
    """The map acting as m1 after m2."""
    return ProjMap(_matmul(m1.matrix, m2.matrix))


def invert(g: ProjMap) -> ProjMap:
    return ProjMap(_adjugate(g.matrix))


def transform(g: ProjMap, config: Configuration) -> Configuration:
    return Configuration(tuple(apply(g, p) for p in config.points))


def frame_map(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint) -> ProjMap:
    """The unique map sending p1..p4 to (1:0:0), (0:1:0), (0:0:1), (1:1:1).

    Write v4 = a1 v1 + a2 v2 + a3 v3; the matrix with columns a_i v_i sends
    the standard frame to p1..p4, and its inverse is the answer.
    """
    v = [p1.coords, p2.coords, p3.coords]
    w = p4.coords
    d = det3(*v)
    if d == 0:
        raise ThreeCollinear("first three frame points are collinear")
    # Cramer's rule on the column system; keep numerators, common factor d drops out
    alphas = (det3(w, v[1], v[2]), det3(v[0], w, v[2]), det3(v[0], v[1], w))
    if any(a == 0 for a in alphas):
        raise ThreeCollinear("fourth frame point is collinear with two of the others")
    cols = [[alphas[c] * v[c][r] for c in range(3)] for r in range(3)]
    return ProjMap(_adjugate(cols))


def general_position_quadruple(config: Configuration) -> tuple[int, int, int, int] | None:
    """Lexicographically smallest 4 labels with no three collinear, if any."""
    pts = config.points
    for quad in combinations(range(config.n), 4):
        if all(det3(*(pts[x].coords for x in tri)) != 0 for tri in combinations(quad, 3)):
            return tuple(x + 1 for x in quad)
    return None


def labeled_equivalent(P: Configuration, Q: Configuration) -> ProjMap | None:
    """Return g with g(P_i) = Q_i for every label i, or None if no such g exists."""
    if P.n != Q.n:
        raise ValueError(f"configurations differ in size: {P.n} vs {Q.n}")
    if P.n < 4:
        raise DegenerateInput("labeled equivalence needs at least 4 points")
    quad = general_position_quadruple(P)
    if quad is None:
        raise DegenerateInput("no four points of the first configuration are in general position")
    phi1 = frame_map(*(P[x] for x in quad))
    try:
        phi2 = frame_map(*(Q[x] for x in quad))
    except ThreeCollinear:
        return None
    g = compose(invert(phi2), phi1)
    if all(apply(g, p) == q for p, q in zip(P.points, Q.points)):
        return g
    return None


def random_projmap(rng: random.Random, bound: int = 5) -> ProjMap:
    """Random invertible integer matrix with entries in [-bound, bound]."""
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        if det3(*rows) != 0:
            return ProjMap(rows)


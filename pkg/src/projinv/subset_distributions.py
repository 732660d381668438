"""Distributions of m-subsets up to a group action, via pluggable signatures.

A :class:`SubsetSignature` maps an m-element subset to a canonical key that
stands for its congruence class; :func:`mu` counts keys over all m-subsets.
Two instances ship: the projective (a, b) signature of 5 points and the
translation invariants of points on the rational line.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

from .errors import TooFewPoints
from .five_point_signature import signature
from .scalar_geometry import Configuration, ProjPoint


@dataclass(frozen=True)
class SubsetSignature:
    m: int
    sig: Callable[[tuple], Hashable]


def mu(points: Iterable, signature_: SubsetSignature) -> Counter:
    """Multiset of signature keys over all m-subsets of ``points``."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    if len(pts) < signature_.m:
        raise TooFewPoints(f"need at least {signature_.m} points, got {len(pts)}")
    return Counter(signature_.sig(subset) for subset in combinations(pts, signature_.m))


def translation3_sig(x, y, z) -> tuple[Fraction, Fraction]:
    """Symmetric, translation-invariant pair (f1, f2) of three points on a line."""
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    f1 = x * x + y * y + z * z - x * y - x * z - y * z
    f2 = (2 * x - y - z) * (2 * y - x - z) * (2 * z - x - y)
    return (f1, f2)


def translation2_sig(x, y) -> Fraction:
    """(x - y)^2; it is also reflection-invariant, which is why 2-subsets cannot reconstruct."""
    d = Fraction(x) - Fraction(y)
    return d * d


def _projective5(subset: Sequence[ProjPoint]):
    return signature(Configuration(tuple(subset))).pair()


PROJECTIVE_5 = SubsetSignature(5, _projective5)
TRANSLATION_2 = SubsetSignature(2, lambda s: translation2_sig(*s))
TRANSLATION_3 = SubsetSignature(3, lambda s: translation3_sig(*s))


def is_translate(C: Iterable, D: Iterable) -> Fraction | None:
    """Return t with D = C + t, or None."""
    C = sorted(Fraction(x) for x in C)
    D = sorted(Fraction(x) for x in D)
    if len(C) != len(D):
        return None
    if not C:
        return Fraction(0)
    t = D[0] - C[0]
    if all(c + t == d for c, d in zip(C, D)):
        return t
    return None


def _sample_line_set(rng: random.Random, n: int, bound: int) -> list[Fraction]:
    pts: set[Fraction] = set()
    while len(pts) < n:
        pts.add(Fraction(rng.randint(-bound, bound), rng.randint(1, 4)))
    return sorted(pts)


def demo_translation(n: int, seed: int, points: Sequence | None = None, bound: int = 50) -> dict:
    """Reproduce the 2-subset counterexample and the 3-subset reconstruction on the line.

    Clause i: mu_2(C) == mu_2(-C) although -C is not a translate of C
    (skipped when C happens to be symmetric). Clause ii: a shuffled translate
    of C has the same mu_3 and its offset is recovered. Clause iii: an
    independent sample has a different mu_3.
    """
    if n < 3:
        raise TooFewPoints("the translation demo needs n >= 3")
    rng = random.Random(seed)
    C = [Fraction(x) for x in points] if points is not None else _sample_line_set(rng, n, bound)
    if len(C) != n:
        raise ValueError(f"expected {n} points, got {len(C)}")
    neg = [-x for x in C]

    shift_back = is_translate(C, neg)
    clause_i = {
        "mu2_equal": mu(C, TRANSLATION_2) == mu(neg, TRANSLATION_2),
        "translate": None if shift_back is None else str(shift_back),
        "skipped": shift_back is not None,
    }
    clause_i["ok"] = clause_i["skipped"] or (clause_i["mu2_equal"] and shift_back is None)

    t = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
    D = [x + t for x in C]
    rng.shuffle(D)
    recovered = is_translate(C, D)
    clause_ii = {
        "t": str(t),
        "mu3_equal": mu(C, TRANSLATION_3) == mu(D, TRANSLATION_3),
        "recovered": None if recovered is None else str(recovered),
    }
    clause_ii["ok"] = clause_ii["mu3_equal"] and recovered == t

    while True:
        E = _sample_line_set(rng, n, bound)
        if is_translate(C, E) is None:
            break
    clause_iii = {
        "other": [str(x) for x in E],
        "mu3_differ": mu(C, TRANSLATION_3) != mu(E, TRANSLATION_3),
    }
    clause_iii["ok"] = clause_iii["mu3_differ"]

    return {
        "n": n,
        "seed": seed,
        "C": [str(x) for x in C],
        "clause_i": clause_i,
        "clause_ii": clause_ii,
        "clause_iii": clause_iii,
        "ok": clause_i["ok"] and clause_ii["ok"] and clause_iii["ok"],
    }

"""Seeded generators for generic test configurations, maps and relabelings."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import DegenerateDenominator, ResamplingExhausted
from .five_point_signature import subset_signature
from .scalar_geometry import BracketTable, Configuration, ProjPoint, det3

RETRIES_PER_POINT = 1000


def random_generic_config(n: int, seed: int, coord_bound: int = 20) -> Configuration:
    """Integer configuration with coordinates in [-coord_bound, coord_bound].

    Points are added one at a time; each is resampled (at most
    RETRIES_PER_POINT times) until no three points are collinear and, for
    n >= 5, all 5-subset signatures are pairwise distinct.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if coord_bound < 2:
        raise ValueError("coord_bound must be at least 2")
    rng = random.Random(seed)
    points: list[ProjPoint] = []
    seen_sigs: set = set()
    for _ in range(n):
        for _attempt in range(RETRIES_PER_POINT):
            v = [rng.randint(-coord_bound, coord_bound) for _ in range(3)]
            if v == [0, 0, 0]:
                continue
            cand = ProjPoint(*v)
            if any(det3(p.coords, q.coords, cand.coords) == 0 for p, q in combinations(points, 2)):
                continue
            if cand in points:
                continue
            new_sigs = _new_subset_signatures(points, cand)
            if new_sigs is None:
                continue
            if len(set(new_sigs)) != len(new_sigs) or seen_sigs.intersection(new_sigs):
                continue
            points.append(cand)
            seen_sigs.update(new_sigs)
            break
        else:
            raise ResamplingExhausted(
                f"no admissible point {len(points) + 1} of {n} after {RETRIES_PER_POINT} "
                f"draws with coord_bound={coord_bound}"
            )
    return Configuration(tuple(points))


def _new_subset_signatures(points: list[ProjPoint], cand: ProjPoint):
    """Signatures of the 5-subsets that contain the candidate point."""
    k = len(points) + 1
    if k < 5:
        return []
    config = Configuration(tuple(points) + (cand,))
    br = BracketTable(config)
    sigs = []
    try:
        for rest in combinations(range(1, k), 4):
            sigs.append(subset_signature(config, rest + (k,), br).pair())
    except DegenerateDenominator:
        return None
    return sigs


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return tuple(perm)

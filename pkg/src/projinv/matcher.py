"""Unlabeled equivalence: find a relabeling and a projective map between configurations.

A result (perm, g) means Q_i = g(P_perm(i)) for every label i of Q.
Single-worker search is deterministic; the returned witness is always verified.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .cross_invariants import _c_from_brackets
from .errors import DegenerateDenominator, DegenerateInput, ThreeCollinear
from .fingerprint import Fingerprint, fingerprints_equal, subset_signatures
from .projective_maps import (
    ProjMap,
    apply,
    compose,
    frame_map,
    general_position_quadruple,
    invert,
    labeled_equivalent,
)
from .scalar_geometry import BracketTable, Configuration, no_three_collinear, points_distinct

BRUTE_FORCE_MAX_N = 7


@dataclass(frozen=True)
class MatchResult:
    perm: tuple[int, ...]
    map: ProjMap


@dataclass
class SearchStats:
    """Counters filled in by match_configs; used by complexity tests."""

    candidate_subsets: int = 0
    bijection_tests: int = 0
    used_fallback: str | None = None


def verify_match(P: Configuration, Q: Configuration, result: MatchResult) -> bool:
    if P.n != Q.n or sorted(result.perm) != list(range(1, P.n + 1)):
        return False
    return all(apply(result.map, P[result.perm[i - 1]]) == Q[i] for i in Q.labels)


def _label_profile(br: BracketTable, labels: Sequence[int], who: int) -> tuple:
    """Sorted c-values with first index ``who`` over orderings of the other four labels."""
    others = [x for x in labels if x != who]
    return tuple(sorted(_c_from_brackets(br, who, *t) for t in permutations(others)))


def _extend(P: Configuration, Q: Configuration, q_index: dict, g: ProjMap) -> MatchResult | None:
    """Complete a map to a labeling by exact image lookup; None if any image misses Q."""
    perm = [0] * Q.n
    for p_label in P.labels:
        q_label = q_index.get(apply(g, P[p_label]))
        if q_label is None or perm[q_label - 1]:
            return None
        perm[q_label - 1] = p_label
    result = MatchResult(tuple(perm), g)
    return result if verify_match(P, Q, result) else None


def _map_from_pairs(P: Configuration, Q: Configuration, pairs: Sequence[tuple[int, int]]) -> ProjMap | None:
    """Map sending P_p to Q_q for the first four (p, q) pairs, if both quadruples are frames."""
    try:
        phi1 = frame_map(*(P[p] for p, _ in pairs[:4]))
        phi2 = frame_map(*(Q[q] for _, q in pairs[:4]))
    except ThreeCollinear:
        return None
    return compose(invert(phi2), phi1)


def _guided(P, Q, p_sigs, q_sigs, stats: SearchStats) -> MatchResult | None:
    counts = Counter(s.pair() for s in p_sigs.values())
    anchor = next((S for S, s in p_sigs.items() if counts[s.pair()] == 1), None)
    if anchor is None:
        return None
    target = p_sigs[anchor].pair()
    candidates = [T for T, s in q_sigs.items() if s.pair() == target]
    brP, brQ = BracketTable(P), BracketTable(Q)
    q_index = {pt: i for i, pt in enumerate(Q.points, start=1)}
    p_prof = {s: _label_profile(brP, anchor, s) for s in anchor}
    for T in candidates:
        stats.candidate_subsets += 1
        q_prof = {t: _label_profile(brQ, T, t) for t in T}
        allowed = [[t for t in T if q_prof[t] == p_prof[s]] for s in anchor]
        for image in _bijections(allowed):
            stats.bijection_tests += 1
            pairs = list(zip(anchor, image))
            g = _map_from_pairs(P, Q, pairs)
            if g is None or apply(g, P[anchor[4]]) != Q[image[4]]:
                continue
            result = _extend(P, Q, q_index, g)
            if result is not None:
                return result
    return None


def _bijections(allowed: list[list[int]]):
    """Injective choices picking one element from each list, in order."""
    def rec(pos, used):
        if pos == len(allowed):
            yield ()
            return
        for t in allowed[pos]:
            if t not in used:
                for rest in rec(pos + 1, used | {t}):
                    yield (t,) + rest
    yield from rec(0, frozenset())


def _backtrack(P: Configuration, Q: Configuration, stats: SearchStats) -> MatchResult | None:
    """Assign P-labels to five Q-labels, pruning on c-value equality, then extend."""
    quad = general_position_quadruple(Q)
    if quad is None:
        return None
    fifth = next(x for x in Q.labels if x not in quad)
    q_labels = quad + (fifth,)
    brP, brQ = BracketTable(P), BracketTable(Q)
    q_index = {pt: i for i, pt in enumerate(Q.points, start=1)}

    def c(br, t):
        try:
            return _c_from_brackets(br, *t)
        except DegenerateDenominator:
            return None

    def consistent(assigned):
        # every c-value among the assigned labels must agree
        k = len(assigned)
        if k < 5:
            return True
        for t in permutations(range(k), 5):
            if k - 1 not in t:
                continue
            if c(brQ, [q_labels[x] for x in t]) != c(brP, [assigned[x] for x in t]):
                return False
        return True

    def rec(assigned):
        if len(assigned) == 5:
            stats.bijection_tests += 1
            g = _map_from_pairs(P, Q, list(zip(assigned, q_labels)))
            return None if g is None else _extend(P, Q, q_index, g)
        for p in P.labels:
            if p in assigned:
                continue
            nxt = assigned + (p,)
            if consistent(nxt):
                found = rec(nxt)
                if found is not None:
                    return found
        return None

    return rec(())


def brute_force_match(P: Configuration, Q: Configuration) -> MatchResult | None:
    """Try every relabeling of P against Q; exponential, capped at BRUTE_FORCE_MAX_N points."""
    if P.n != Q.n:
        return None
    if P.n > BRUTE_FORCE_MAX_N:
        raise DegenerateInput(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    if P.n < 4 or general_position_quadruple(P) is None:
        raise DegenerateInput("first configuration has no four points in general position")
    for perm in permutations(P.labels):
        g = labeled_equivalent(P.relabeled(perm), Q)
        if g is not None:
            return MatchResult(tuple(perm), g)
    return None


def match_configs(P: Configuration, Q: Configuration, stats: SearchStats | None = None) -> MatchResult | None:
    """Find (perm, g) with Q_i = g(P_perm(i)), or None if the configurations are inequivalent.

    Generic inputs go through the fingerprint-guided anchor search. Inputs whose
    5-subset signatures repeat use a pruned backtracking search, or brute force
    for small n, since no unique anchor exists.
    """
    if stats is None:
        stats = SearchStats()
    if P.n != Q.n:
        return None
    if P.n < 5:
        raise DegenerateInput("matching needs at least 5 points")
    if not points_distinct(P) or not no_three_collinear(P):
        raise DegenerateInput("first configuration must have distinct points, no three collinear")
    if not points_distinct(Q) or not no_three_collinear(Q):
        # projective maps preserve collinearity and distinctness
        return None
    p_sigs = subset_signatures(P)
    try:
        q_sigs = subset_signatures(Q)
    except DegenerateDenominator:
        return None
    fp = Fingerprint(P.n, tuple(s.pair() for s in p_sigs.values()))
    fq = Fingerprint(Q.n, tuple(s.pair() for s in q_sigs.values()))
    if not fingerprints_equal(fp, fq):
        return None
    if len(set(fp.entries)) == len(fp.entries):
        result = _guided(P, Q, p_sigs, q_sigs, stats)
        if result is not None:
            return result
        stats.used_fallback = "backtrack"
        return _backtrack(P, Q, stats)
    if P.n <= BRUTE_FORCE_MAX_N:
        stats.used_fallback = "brute_force"
        return brute_force_match(P, Q)
    raise DegenerateInput("no unique anchor subset and too many points for brute force")

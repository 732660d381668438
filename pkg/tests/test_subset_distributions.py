import random
from collections import Counter
from fractions import Fraction
from math import comb

import pytest

from projinv import (
    demo_translation,
    fingerprint,
    is_translate,
    mu,
    random_generic_config,
    translation2_sig,
    translation3_sig,
)
from projinv.errors import TooFewPoints
from projinv.projective_maps import random_projmap, transform
from projinv.subset_distributions import PROJECTIVE_5, TRANSLATION_2, TRANSLATION_3


def rand_set(rng, size):
    pts = set()
    while len(pts) < size:
        pts.add(Fraction(rng.randint(-60, 60), rng.randint(1, 5)))
    return sorted(pts)


def test_mu_single_subset():
    assert mu([1, 2, 3], TRANSLATION_3) == Counter({translation3_sig(1, 2, 3): 1})


def test_mu_total_count():
    rng = random.Random(0)
    C = rand_set(rng, 6)
    assert sum(mu(C, TRANSLATION_3).values()) == comb(6, 3)
    assert sum(mu(C, TRANSLATION_2).values()) == comb(6, 2)


def test_mu_errors():
    with pytest.raises(TooFewPoints):
        mu([1, 2], TRANSLATION_3)
    with pytest.raises(ValueError):
        mu([1, 1, 2], TRANSLATION_2)


def test_mu_projective_matches_fingerprint():
    cfg = random_generic_config(7, 3, 20)
    dist = mu(cfg.points, PROJECTIVE_5)
    assert sorted(dist.elements()) == list(fingerprint(cfg).entries)


def test_translation3_values():
    assert translation3_sig(0, 0, 0) == (0, 0)
    # f1 = 0 + 1 + 4 - 0 - 0 - 2, and the middle factor 2*1 - 0 - 2 vanishes
    assert translation3_sig(0, 1, 2) == (3, 0)


def test_translation3_invariance():
    rng = random.Random(1)
    for _ in range(50):
        x, y, z = (Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(3))
        t = Fraction(rng.randint(-30, 30), rng.randint(1, 6))
        assert translation3_sig(x + t, y + t, z + t) == translation3_sig(x, y, z)
        assert translation3_sig(y, z, x) == translation3_sig(z, x, y) == translation3_sig(y, x, z)


def test_translation2_values():
    assert translation2_sig(3, 5) == 4
    assert translation2_sig(5, 3) == translation2_sig(3, 5)


def test_counterexample_fixed_set():
    C = [0, 1, 4]
    neg = [0, -1, -4]
    assert mu(C, TRANSLATION_2) == mu(neg, TRANSLATION_2)
    assert is_translate(C, neg) is None


def test_is_translate_examples():
    assert is_translate([0, 1, 4], [10, 11, 14]) == 10
    assert is_translate([0, 1, 4], [0, -1, -4]) is None
    assert is_translate([0, 1, 4], [0, 1, 4]) == 0
    assert is_translate([0, 1], [0, 1, 2]) is None


def test_mu_invariance_translation_and_pgl():
    rng = random.Random(2)
    for _ in range(50):
        C = rand_set(rng, 5)
        t = Fraction(rng.randint(-99, 99), rng.randint(1, 7))
        assert mu([x + t for x in C], TRANSLATION_3) == mu(C, TRANSLATION_3)
        assert mu([x + t for x in C], TRANSLATION_2) == mu(C, TRANSLATION_2)
    for seed in range(50):
        cfg = random_generic_config(6, seed, 15)
        moved = transform(random_projmap(rng), cfg)
        assert mu(moved.points, PROJECTIVE_5) == mu(cfg.points, PROJECTIVE_5)


def test_counterexample_law_random():
    rng = random.Random(3)
    for _ in range(100):
        C = rand_set(rng, rng.randint(3, 6))
        assert mu(C, TRANSLATION_2) == mu([-x for x in C], TRANSLATION_2)


def test_three_subset_separation():
    rng = random.Random(4)
    for _ in range(100):
        size = rng.randint(3, 6)
        C, D = rand_set(rng, size), rand_set(rng, size)
        if is_translate(C, D) is not None:
            continue
        assert mu(C, TRANSLATION_3) != mu(D, TRANSLATION_3)


@pytest.mark.parametrize("n,seed", [(4, 0), (3, 1), (6, 2)])
def test_demo(n, seed):
    rep = demo_translation(n, seed)
    assert rep["ok"]
    assert rep["clause_i"]["mu2_equal"] and not rep["clause_i"]["skipped"]
    assert rep["clause_ii"]["recovered"] == rep["clause_ii"]["t"]


def test_demo_symmetric_set():
    rep = demo_translation(3, 0, points=[-1, 0, 1])
    assert rep["clause_i"]["skipped"] and rep["clause_i"]["translate"] == "0"
    assert rep["ok"]


def test_demo_needs_three_points():
    with pytest.raises(TooFewPoints):
        demo_translation(2, 0)

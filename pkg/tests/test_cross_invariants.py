import random
from fractions import Fraction
from itertools import permutations

import pytest

from projinv import (
    DegenerateDenominator,
    all_c_values,
    c_value,
    canonical_cindex,
    generic_distinctness,
    random_generic_config,
    relation_residuals,
)
from projinv.cross_invariants import (
    FAMILIES,
    CIndex,
    expected_table_size,
    family_instance_count,
    orbit,
    summarize_residuals,
)
from projinv.projective_maps import random_projmap, transform
from projinv.scalar_geometry import Configuration

from conftest import frame_config


@pytest.mark.parametrize(
    "index",
    [(1, 2, 3, 4, 5), (1, 3, 2, 5, 4), (1, 4, 5, 2, 3), (1, 5, 4, 3, 2)],
)
def test_canonical_cindex_orbit(index):
    assert canonical_cindex(*index) == CIndex(1, 2, 3, 4, 5)


def test_canonical_cindex_rejects_repeats():
    with pytest.raises(IndexError):
        canonical_cindex(1, 2, 2, 3, 4)


def test_canonical_cindex_properties():
    for t in permutations(range(1, 7), 5):
        c = canonical_cindex(*t)
        assert c.i == t[0]
        assert c.j == min(t[1:])
        assert c in orbit(*t)
        assert all(canonical_cindex(*o) == c for o in orbit(*t))


def test_c_value_frame_vectors(f5):
    # on the standard frame these read off the affine coordinates of P5 = (1:2:3)
    assert c_value(f5, 3, 2, 4, 5, 1) == 2
    assert c_value(f5, 2, 3, 4, 5, 1) == 3


def test_c_value_f5_by_hand(f5):
    # [1,2,3] = 1, [1,4,5] = 1, [1,2,4] = 1, [1,3,5] = det(e1, e3, (1,2,3)) = -2
    assert c_value(f5, 1, 2, 3, 4, 5) == Fraction(-1, 2)


def test_c_value_sum_relation(f5):
    assert c_value(f5, 1, 2, 3, 4, 5) + c_value(f5, 1, 2, 5, 4, 3) == 1


def test_c_value_degenerate():
    cfg = Configuration.from_coords([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 2, 3)])
    # [1,2,4] = 0
    with pytest.raises(DegenerateDenominator):
        c_value(cfg, 1, 2, 3, 4, 5)


@pytest.mark.parametrize("n,size", [(4, 0), (5, 30), (6, 180), (7, 630), (8, 1680), (9, 3780)])
def test_table_size(n, size):
    assert expected_table_size(n) == size
    if n >= 5:
        assert len(all_c_values(random_generic_config(n, n, 30))) == size
    else:
        assert len(all_c_values(frame_config())) == 0


def test_table_lookup_any_orbit_member(f5):
    table = all_c_values(f5)
    for t in permutations(range(1, 6)):
        assert table[t] == c_value(f5, *t)


def test_pgl_invariance():
    rng = random.Random(0)
    for trial in range(100):
        cfg = random_generic_config(5 + trial % 3, trial, 20)
        g = random_projmap(rng)
        assert all_c_values(transform(g, cfg)).values == all_c_values(cfg).values


def test_scaling_invariance_of_representatives():
    cfg = random_generic_config(6, 3, 20)
    # c_value only sees canonical coordinates, so compare against raw rational evaluation
    rng = random.Random(1)
    lams = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for _ in cfg.points]
    raw = [tuple(lam * x for x in p.coords) for lam, p in zip(lams, cfg.points)]

    def det(a, b, c):
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])

    for t in permutations(range(1, 7), 5):
        i, j, k, l, m = (x - 1 for x in t)
        expect = det(raw[i], raw[j], raw[k]) * det(raw[i], raw[l], raw[m]) / (det(raw[i], raw[j], raw[l]) * det(raw[i], raw[k], raw[m]))
        assert c_value(cfg, *t) == expect


def test_relations_vanish_on_f5(f5):
    res = relation_residuals(f5)
    assert res and all(r.value == 0 for r in res)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_relations_vanish_random(n):
    for seed in range(50 if n < 8 else 5):
        cfg = random_generic_config(n, 1000 + seed, 20)
        res = relation_residuals(cfg, sample=200 if n >= 7 else None, seed=seed)
        assert all(r.value == 0 for r in res)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_relation_instance_counts(n):
    cfg = random_generic_config(n, 5, 20)
    summary = summarize_residuals(relation_residuals(cfg))
    for fam in FAMILIES:
        assert summary[fam]["instances"] == family_instance_count(fam, n)
    assert summary["triad6"]["instances"] == (0 if n == 5 else family_instance_count("triad6", n))
    assert family_instance_count("triad6", 6) == 720


def test_relations_sampled_for_large_n():
    cfg = random_generic_config(8, 2, 20)
    res = relation_residuals(cfg, sample=50)
    summary = summarize_residuals(res)
    assert summary["inverses"]["instances"] == 50
    assert summary["equal"]["instances"] == 150


def test_fault_injection_detected(f5):
    table = all_c_values(f5)
    bad = table.with_entry((1, 2, 3, 4, 5), table[(1, 2, 3, 4, 5)] + Fraction(1, 7))
    res = relation_residuals(f5, bad)
    nonzero = {r.family for r in res if r.value != 0}
    assert nonzero and "equal" in nonzero


def test_generic_distinctness():
    for seed in range(5):
        assert generic_distinctness(all_c_values(random_generic_config(5, seed, 20)))


def test_generic_distinctness_fault():
    table = all_c_values(random_generic_config(5, 0, 20))
    a, b = list(table)[:2]
    assert not generic_distinctness(table.with_entry(b, table[a]))


def test_distinctness_fails_on_symmetric_config():
    # swapping x and y exchanges P1<->P2 and P3<->P4 and fixes P5
    sym = Configuration.from_coords([(1, 2, 1), (2, 1, 1), (3, -1, 1), (-1, 3, 1), (1, 1, 3)])
    from projinv import no_three_collinear

    assert no_three_collinear(sym)
    table = all_c_values(sym)
    assert table[(1, 2, 3, 4, 5)] == table[(2, 1, 4, 3, 5)]
    assert not generic_distinctness(table)

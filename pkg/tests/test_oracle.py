import random

import pytest

from mapcensus.oracle import (
    BudgetExceeded,
    DartMap,
    count_rooted_oracle,
    count_sensed_oracle,
    genus_of,
    near_regular_oracle,
)


def test_genus_small_maps():
    assert genus_of(DartMap.with_standard_alpha((0, 1))) == 0
    assert genus_of(DartMap.with_standard_alpha((1, 0))) == 0
    # one vertex, darts 0 2 1 3 around it: the two loops interleave
    assert genus_of(DartMap.with_standard_alpha((2, 3, 1, 0))) == 1


def test_dartmap_validation():
    with pytest.raises(ValueError):
        DartMap((0, 1, 2), (1, 0, 2))
    with pytest.raises(ValueError):
        DartMap((0, 0), (1, 0))
    with pytest.raises(ValueError):
        DartMap((0, 1), (0, 1))
    with pytest.raises(ValueError):
        genus_of(DartMap.with_standard_alpha((0, 1, 2, 3)))


def test_genus_is_conjugation_invariant():
    rng = random.Random(7)
    for _ in range(200):
        n = 2 * rng.randint(1, 5)
        sigma = list(range(n))
        rng.shuffle(sigma)
        m = DartMap.with_standard_alpha(sigma)
        if not m.is_connected():
            continue
        g = list(range(n))
        rng.shuffle(g)
        inv = [0] * n
        for i, x in enumerate(g):
            inv[x] = i
        conj = lambda p: tuple(g[p[inv[x]]] for x in range(n))  # noqa: E731
        assert genus_of(DartMap(conj(m.sigma), conj(m.alpha))) == genus_of(m)


def test_rooted_examples():
    assert count_rooted_oracle(None, None, 1) == 2
    assert count_rooted_oracle(1, 4, 2) == 1
    assert count_rooted_oracle(0, 3, 3) == 4


def test_sensed_examples():
    assert count_sensed_oracle(1, 4, 2) == 1
    assert count_sensed_oracle(1, 3, 3) == 1
    assert count_sensed_oracle(1, 4, 4) == 4


def test_unrestricted_sphere_maps():
    # rooted planar maps with n edges: 2, 9, 54, 378
    assert [count_rooted_oracle(0, None, n) for n in range(1, 5)] == [2, 9, 54, 378]


def test_all_genera_sum():
    for n in (2, 3):
        total = sum(count_rooted_oracle(g, None, n) for g in range(n // 2 + 1))
        assert total == count_rooted_oracle(None, None, n)


def test_degree_multiset():
    # two vertices of degrees 1 and 3: a pendant edge on a loop
    assert count_rooted_oracle(0, [1, 3], 2) == 4
    assert count_rooted_oracle(0, [1, 4], 2) == 0


def test_near_regular():
    assert near_regular_oracle(0, 4, 2, 1) == 1
    assert near_regular_oracle(0, 4, 4, 2) == 2


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_rooted_oracle(0, 4, 8)
    with pytest.raises(BudgetExceeded):
        count_sensed_oracle(1, 3, 9, max_darts=12)
    with pytest.raises(BudgetExceeded):
        count_rooted_oracle(0, 4, 4, max_darts=6)
    assert count_rooted_oracle(0, 4, 4, max_darts=8) == 9


def test_sensed_not_more_than_rooted():
    for r, n in ((3, 3), (4, 4), (6, 3), (3, 6)):
        assert count_sensed_oracle(1, r, n) <= count_rooted_oracle(1, r, n)

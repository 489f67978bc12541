from fractions import Fraction

import pytest

from mapcensus import closed_forms as cf
from mapcensus.recurrences import rooted_regular


@pytest.mark.parametrize("f,n,expected", [
    (cf.sigma4, 1, 2), (cf.sigma4, 2, 9), (cf.sigma4, 3, 54),
    (cf.tau4, 1, 1), (cf.tau4, 2, 15), (cf.tau4, 4, 2511),
    (cf.pi4, 1, 5), (cf.pi4, 2, 38),
    (cf.rho4, 0, 1), (cf.rho4, 1, 3), (cf.rho4, 2, 18),
    (cf.omega4, 1, 1), (cf.omega4, 2, 21), (cf.omega4, 4, 5049),
    (cf.sigma3, 0, 1), (cf.sigma3, 1, 4), (cf.sigma3, 3, 336),
    (cf.tau3, 0, 1), (cf.tau3, 1, 28), (cf.tau3, 2, 664), (cf.tau3, 4, 326496),
    (cf.pi3, 1, 9), (cf.pi3, 2, 118), (cf.pi3, 3, 1773),
    (cf.theta_coeff, 0, 1), (cf.theta_coeff, 1, 6), (cf.theta_coeff, 2, 64),
    (cf.kappa3, 1, 6), (cf.kappa3, 2, 174), (cf.kappa3, 3, 4236),
    (cf.kappa4, 1, 4), (cf.kappa4, 2, 68), (cf.kappa4, 3, 964),
])
def test_values(f, n, expected):
    assert f(n) == expected


def test_f_aux():
    assert cf.f_aux(0) == 1
    assert cf.f_aux(1) == Fraction(4, 3)
    assert cf.f_aux(-1) == 0


def test_sigma3_from_theta():
    for n in range(21):
        assert cf.sigma3(n) * (n + 2) == 2 * cf.theta_coeff(n)


def test_r4_matches_recurrence():
    for v in range(1, 11):
        assert cf.sigma4(v) == rooted_regular("sphere", 4, v)
        assert cf.tau4(v) == rooted_regular("torus", 4, v)
        assert cf.pi4(v) == rooted_regular("projective", 4, v)
        assert cf.kappa4(v) == rooted_regular("klein", 4, v)


def test_r3_matches_recurrence():
    for n in range(1, 11):
        assert cf.sigma3(n) == rooted_regular("sphere", 3, 2 * n)
        assert cf.tau3(n - 1) == rooted_regular("torus", 3, 2 * n)
        assert cf.pi3(n) == rooted_regular("projective", 3, 2 * n)
        assert cf.kappa3(n, verify=True) == rooted_regular("klein", 3, 2 * n)


def test_kappa3_theta_is_signed():
    assert cf.KAPPA3_THETA_READING == "signed"
    assert all(cf.kappa3_theta_reading(n) == "signed" for n in range(1, 6))


def test_integrality_to_twenty():
    for n in range(1, 21):
        for f in (cf.sigma4, cf.tau4, cf.pi4, cf.rho4, cf.omega4, cf.sigma3, cf.tau3, cf.pi3, cf.kappa3):
            assert f(n) > 0


@pytest.mark.parametrize("f", [cf.tau4, cf.pi4, cf.omega4, cf.pi3, cf.kappa3, cf.kappa4])
def test_domain(f):
    with pytest.raises(ValueError):
        f(0)


def test_vertex_views_vanish_off_lattice():
    assert cf.sigma3_vertices(Fraction(3, 2)) == 0
    assert cf.sigma3_vertices(3) == 0
    assert cf.sigma3_vertices(4) == 32
    assert cf.tau3_vertices(2) == 1
    assert cf.tau3_vertices(4) == 28
    assert cf.rho4_vertices(Fraction(1, 4)) == 0
    assert cf.tau4_vertices(0) == 0


def test_series():
    assert [s.value for s in cf.series("omega4", range(1, 5))] == [1, 21, 342, 5049]
    assert cf.series("rho4", [2])[0] == cf.SequenceValue("rho4", 2, 18)

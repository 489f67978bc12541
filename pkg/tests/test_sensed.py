import logging

import pytest

from mapcensus.bigmath import NonExactDivision
from mapcensus.golden import golden
from mapcensus.recurrences import rooted_regular
from mapcensus.sensed import (
    CensusTerm,
    census_terms,
    divisor_term,
    q_leaf3,
    sensed_general,
    sensed_tau3,
    sensed_tau4,
)


@pytest.mark.parametrize("v,expected", [(1, 1), (3, 23), (10, 212603589)])
def test_tau4(v, expected):
    assert sensed_tau4(v) == expected


@pytest.mark.parametrize("v,expected", [(2, 1), (4, 5), (8, 669)])
def test_tau3(v, expected):
    assert sensed_tau3(v) == expected


@pytest.mark.parametrize("r,v,expected", [(5, 2, 15), (6, 1, 3), (6, 3, 3313)])
def test_general(r, v, expected):
    assert sensed_general(r, v) == expected


@pytest.mark.parametrize("i,v,expected", [(2, 2, 1), (3, 4, 1), (4, 4, 0), (1, 2, 1), (1, 4, 4), (2, 4, 4)])
def test_q_leaf3(i, v, expected):
    assert q_leaf3(i, v) == expected


def test_q_leaf3_infeasible_is_zero():
    assert q_leaf3(1, 3) == 0
    assert q_leaf3(3, 2) == 0
    with pytest.raises(ValueError):
        q_leaf3(0, 4)


def test_q_leaf3_one_is_sphere_cell():
    from mapcensus.recurrences import engine
    s = engine(3).get("s", 30)
    for v in range(2, 21, 2):
        assert q_leaf3(1, v) == s.cell((3 * v - 2) // 2, 1)


def test_q_leaf3_recurrence_matches_counter():
    from mapcensus.orbifolds import constrained_sphere_count
    from mapcensus.bigmath import exact_div
    for i in (2, 3, 4):
        for v in range(i, 14):
            if (3 * (v - i) + i) % 2:
                continue
            edges = (3 * (v - i) + i) // 2
            cubic = v - i
            if cubic == 0:
                assert q_leaf3(i, v) == (1 if (i, v) == (2, 2) else 0)
                continue
            anywhere = constrained_sphere_count(3, (), i, edges)
            assert q_leaf3(i, v) == exact_div(anywhere * i, 3 * cubic), (i, v)


def test_q_leaf3_logs_anomaly(monkeypatch, caplog):
    import mapcensus.sensed as sensed
    raw = sensed.q_leaf3.__wrapped__
    monkeypatch.setattr(sensed, "q_leaf3", lambda i, v: -1)
    with caplog.at_level(logging.WARNING, logger="mapcensus.sensed"):
        assert raw(3, 4) == 0
    assert "anomalous" in caplog.text


def test_closed_and_general_agree():
    for v in range(1, 21):
        assert sensed_tau4(v) == sensed_general(4, v)
        if v % 2 == 0:
            assert sensed_tau3(v) == sensed_general(3, v)


def test_table_four():
    for r in (3, 4, 5, 6):
        for k, value in golden("sensed.torus", r).items():
            v = 2 * k if r % 2 else k
            assert sensed_general(r, v) == value


def test_bounds():
    for r, vs in ((3, range(2, 21, 2)), (4, range(1, 11)), (5, range(2, 13, 2)), (6, range(1, 9))):
        for v in vs:
            rooted = rooted_regular("torus", r, v)
            sensed = sensed_general(r, v)
            assert rooted <= sensed * r * v
            assert sensed <= rooted


def test_census_terms():
    terms = census_terms(4, 2)
    assert [t.source for t in terms] == ["[2^4]", "[2,4^2]", "[3^3]", "[2,3,6]", "J2"]
    assert all(isinstance(t, CensusTerm) for t in terms)
    assert sum(t.contribution for t in terms) == 8 * 4
    assert terms[-1].contribution == divisor_term(4, 2)


def test_census_rejects_parity():
    with pytest.raises(ValueError):
        census_terms(5, 1)
    with pytest.raises(ValueError):
        sensed_tau3(3)
    with pytest.raises(ValueError):
        sensed_tau4(0)


def test_integrality_failure_is_loud(monkeypatch):
    import mapcensus.sensed as sensed
    monkeypatch.setattr(sensed, "divisor_term", lambda r, v, rooted=None: 1)
    with pytest.raises(NonExactDivision, match="non-exact division"):
        sensed.sensed_general(4, 3)

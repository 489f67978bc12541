"""Sensed r-regular maps on the torus.

Every sensed map is counted through the rooted maps it covers, grouped by
the rotation that fixes them: quotients by periodic rotations with fixed
points live on the four spherical orbifolds of
:func:`mapcensus.orbifolds.toroidal_orbifolds`, fixed-point-free
rotations by ``L`` contribute ``J2(L)`` times the rooted torus count with
``v/L`` vertices.  The total divided by the number of darts ``r*v`` is the
sensed count.

For r = 3 and 4 the orbifold terms also have closed forms
(:func:`sensed_tau3`, :func:`sensed_tau4`); :func:`sensed_general` uses
the constrained sphere counter for any r.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mapcensus.bigmath import as_int, binomial, divisors, exact_div, jordan_totient_2
from mapcensus.closed_forms import (
    omega4_vertices,
    rho4_vertices,
    sigma3_vertices,
    sigma4_vertices,
    tau3_vertices,
    tau4_vertices,
)
from mapcensus.orbifolds import constrained_sphere_count, count_quotient_maps, toroidal_orbifolds
from mapcensus.recurrences import rooted_regular

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusTerm:
    source: str          # orbifold label, or "J2" for the divisor sum
    contribution: int


def _F(x) -> Fraction:
    return Fraction(x)


def _int_or_zero(x) -> int:
    """Coefficient products must be integral once the count is nonzero."""
    n = as_int(x)
    if n is None:
        raise ArithmeticError(f"non-integral census term {x}")
    return n


def divisor_term(r: int, v: int, rooted=None) -> int:
    """Sum over L | v of J2(L) times the rooted torus count with v/L vertices."""
    if rooted is None:
        rooted = lambda w: rooted_regular("torus", r, w)  # noqa: E731
    total = 0
    for L in divisors(v):
        w = v // L
        if (r * w) % 2 == 0:
            total += jordan_totient_2(L) * rooted(w)
    return total


def census_terms(r: int, v: int) -> list[CensusTerm]:
    """Contributions to the sensed count, before division by ``r*v``."""
    if r < 3 or v < 1:
        raise ValueError(f"need r >= 3 and v >= 1, got r={r}, v={v}")
    if (r * v) % 2:
        raise ValueError(f"r*v must be even, got r={r}, v={v}")
    terms = [CensusTerm(sig.label, sig.multiplicity * count_quotient_maps(sig, r, v))
             for sig in toroidal_orbifolds()]
    terms.append(CensusTerm("J2", divisor_term(r, v)))
    return terms


def sensed_general(r: int, v: int) -> int:
    """Sensed r-regular toroidal maps with ``v`` vertices."""
    total = sum(t.contribution for t in census_terms(r, v))
    return exact_div(total, r * v)


# -- r = 4 -------------------------------------------------------------------

def _B(x, k) -> Fraction:
    return Fraction(binomial(x, k))


def bracket_tau4(v: int) -> dict[str, int]:
    """The four orbifold brackets of the r = 4 census, multiplicities included."""
    v_ = _F(v)
    s, rho, om = sigma4_vertices, rho4_vertices, omega4_vertices
    b2222 = (
        _B(2 + v_ / 2, 4) * s(v_ / 2)
        + v_ / 2 * om(v_ / 2)
        + v_ * _B(v_, 2) * rho((v_ - 2) / 2)
        + v_**2 * (v_ + 1) / 2 * rho((v_ - 1) / 2)
        + v_ * _B((v_ + 2) / 2, 2) * rho(v_ / 2)
        + v_ * _B((v_ + 3) / 2, 3) * s((v_ - 1) / 2)
        + _B(v_, 2) * _B((v_ + 2) / 2, 2) * s((v_ - 2) / 2)
        + (v_ + 1) / 2 * _B(v_, 3) * s((v_ - 3) / 2)
        + _B(v_, 4) * s((v_ - 4) / 2)
    )
    b244 = (
        (v_ + 8) / 4 * _B(1 + v_ / 4, 2) * s(v_ / 4)
        + v_ * (v_ + 3) / 4 * rho((v_ - 1) / 4)
        + v_ / 2 * _B((v_ + 6) / 4, 2) * s((v_ - 2) / 4)
        + v_ * (v_ + 2) / 8 * rho((v_ - 2) / 4)
        + v_ * (v_ - 2) / 4 * rho((v_ - 4) / 4)
    )
    b333 = _B(2 + v_ / 3, 3) * s(v_ / 3)
    b236 = (
        (v_ + 12) / 6 * (v_ + 6) / 6 * v_ / 6 * s(v_ / 6)
        + (v_ + 9) / 6 * (v_ + 3) / 6 * v_ / 3 * s((v_ - 3) / 6)
    )
    return {
        "[2^4]": _int_or_zero(b2222),
        "[2,4^2]": 2 * _int_or_zero(b244),
        "[3^3]": 2 * _int_or_zero(b333),
        "[2,3,6]": 2 * _int_or_zero(b236),
    }


def sensed_tau4(v: int) -> int:
    """Sensed 4-regular toroidal maps with ``v`` vertices, by closed formula."""
    if v < 1:
        raise ValueError(f"v must be >= 1, got {v}")
    total = sum(bracket_tau4(v).values()) + divisor_term(4, v, tau4_vertices)
    return exact_div(total, 4 * v)


# -- r = 3 -------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_leaf3(i: int, v: int) -> int:
    """Cubic planar maps with ``v`` vertices of which ``i`` are leaves, rooted at a leaf.

    For ``i >= 2`` this follows the descending recurrence from
    ``q(2, 2) = 1``.  For ``i = 1`` the recurrence has no base; the value is
    read off the constrained sphere counter, which roots anywhere except at
    the leaf, and converted to leaf rooting.
    """
    if i < 1:
        raise ValueError(f"leaf count must be >= 1, got {i}")
    if v < i or (3 * (v - i) + i) % 2:
        return 0
    if i == 1:
        if v < 2:
            return 0
        edges = (3 * v - 2) // 2
        anywhere = constrained_sphere_count(3, (), 1, edges)
        # every map has 3(v-1) non-leaf darts against 1 leaf dart
        return exact_div(anywhere, 3 * (v - 1))
    if i == 2 and v == 2:
        return 1
    value = Fraction(3 * v - 2 * i - 4, i - 1) * q_leaf3(i - 1, v - 2)
    n = as_int(value)
    if n is None or n < 0:
        log.warning("q_leaf3(%d, %d): anomalous value %s, using 0", i, v, value)
        return 0
    return n


def _q(i: int, x) -> int:
    n = as_int(x)
    return q_leaf3(i, n) if n is not None and n >= i else 0


def bracket_tau3(v: int) -> dict[str, int]:
    """The four orbifold brackets of the r = 3 census, multiplicities included."""
    v_ = _F(v)
    s = sigma3_vertices
    b2222 = _B(2 + v_ / 4, 4) * s(v_ / 2) + sum(
        3 * v_ / (2 * i) * _B(2 + (v_ - 2 * i) / 4, 4 - i) * _q(i, v_ / 2 + i)
        for i in range(1, 5)
    )
    b333 = _B(2 + v_ / 6, 3) * s(v_ / 3) + sum(
        v_ / i * _B((v_ + 12 - 4 * i) / 6, 3 - i) * _q(i, (v_ + 2 * i) / 3)
        for i in range(1, 4)
    )
    b244 = (
        3 * v_ / 4 * _B((v_ + 12) / 8, 2) * _q(1, v_ / 4 + 1)
        + (2 + v_ / 8) * _B(1 + v_ / 8, 2) * s(v_ / 4)
    )
    b236 = (
        (2 + v_ / 12) * (1 + v_ / 12) * v_ / 12 * s(v_ / 6)
        + v_ * _B((v_ + 16) / 12, 2) * _q(1, (v_ + 4) / 6)
        + v_ / 2 * (v_ + 10) / 12 * _q(2, (v_ + 10) / 6)
        + v_ * _B((v_ + 18) / 12, 2) * _q(1, v_ / 6 + 1)
    )
    return {
        "[2^4]": _int_or_zero(b2222),
        "[2,4^2]": 2 * _int_or_zero(b244),
        "[3^3]": 2 * _int_or_zero(b333),
        "[2,3,6]": 2 * _int_or_zero(b236),
    }


def sensed_tau3(v: int) -> int:
    """Sensed cubic toroidal maps with ``v`` vertices (``v`` even), by closed formula."""
    if v < 2 or v % 2:
        raise ValueError(f"v must be even and >= 2, got {v}")
    total = sum(bracket_tau3(v).values()) + divisor_term(3, v, tau3_vertices)
    return exact_div(total, 3 * v)

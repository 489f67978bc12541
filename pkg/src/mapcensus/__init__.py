"""Exact enumeration of rooted and sensed r-regular maps on low-genus surfaces."""

from mapcensus.bigmath import (
    NonExactDivision,
    binomial,
    divisors,
    double_factorial,
    exact_div,
    jordan_totient_2,
    multichoose,
)
from mapcensus.recurrences import SURFACES, rooted_regular
from mapcensus.sensed import sensed_general, sensed_tau3, sensed_tau4

__all__ = [
    "NonExactDivision",
    "SURFACES",
    "binomial",
    "divisors",
    "double_factorial",
    "exact_div",
    "jordan_totient_2",
    "multichoose",
    "rooted_regular",
    "sensed_general",
    "sensed_tau3",
    "sensed_tau4",
]

__version__ = "0.1.0"

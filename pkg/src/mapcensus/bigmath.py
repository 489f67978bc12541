"""Exact integer helpers shared by the counting modules.

Everything here works on Python ints (and integral ``Fraction`` values where
noted); no floating point is used anywhere in a counting path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


class NonExactDivision(ArithmeticError):
    """Raised when a quotient that must be an integer is not."""


def as_int(x) -> int | None:
    """Return ``x`` as an int if it is an integral rational, else None."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        q = Fraction(x)
        if q.denominator == 1:
            return q.numerator
    return None


def binomial(n, k) -> int:
    """C(n, k), vanishing outside ``0 <= k <= n``.

    Non-integral arguments also give 0, which is what lets census formulas
    be written with arguments like ``v/4`` that only make sense for some v.
    """
    n, k = as_int(n), as_int(k)
    if n is None or k is None or n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multichoose(n, k) -> int:
    """Number of size-k multisets drawn from n symbols."""
    n, k = as_int(n), as_int(k)
    if n is None or k is None or k < 0:
        return 0
    if k == 0:
        return 1
    if n <= 0:
        return 0
    return math.comb(n + k - 1, k)


def double_factorial(n: int) -> int:
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (arguments here are small)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def jordan_totient_2(L: int) -> int:
    """Jordan's totient J_2(L) = L^2 * prod_{p | L} (1 - p^-2)."""
    if L < 1:
        raise ValueError(f"J_2 needs a positive argument, got {L}")
    num = L * L
    den = 1
    for p in factorize(L):
        num *= p * p - 1
        den *= p * p
    return exact_div(num, den)


def exact_div(a: int, b: int) -> int:
    """Divide ``a`` by ``b``, insisting that the division is exact.

    Doubles as the integrality assertion for Burnside-type orbit sums.
    """
    if b < 1:
        raise ValueError(f"divisor must be positive, got {b}")
    q, rem = divmod(a, b)
    if rem:
        raise NonExactDivision(f"non-exact division: {a} / {b}")
    return q


def exact_int(q: Fraction | int, what: str = "value") -> int:
    """Convert a rational that must be integral, raising otherwise."""
    n = as_int(q)
    if n is None:
        raise NonExactDivision(f"non-exact division: {what} = {q} is not an integer")
    return n


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors need a positive argument, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]

"""Brute-force map counts from permutation pairs on labelled darts.

An orientable map on darts ``0..2n-1`` is a pair ``(sigma, alpha)``:
``sigma`` rotates the darts around each vertex and ``alpha`` is a
fixed-point-free involution pairing darts into edges.  Its faces are the
cycles of ``sigma * alpha``.

Conjugating the pair relabels darts, so labelled maps with a given vertex
cycle type are all obtained by fixing one ``sigma0`` of that type and
running over every perfect matching ``alpha``.  Writing ``A`` for the
number of matchings that give a connected map of the wanted genus and
``Z`` for the order of the centralizer of ``sigma0``::

    labelled maps = (2n)! / Z * A
    rooted maps   = labelled maps * 2n / (2n)! = 2n * A / Z

Sensed maps are the orbits of the centralizer acting on those matchings
by conjugation.  Vertices may carry colours; the centralizer is then
restricted to colour-preserving relabellings.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from mapcensus.bigmath import exact_div

DEFAULT_MAX_DARTS = 12


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DartMap:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]

    def __post_init__(self):
        n = len(self.sigma)
        if len(self.alpha) != n or n % 2:
            raise ValueError("sigma and alpha must act on the same even number of darts")
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation")
        if any(self.alpha[self.alpha[i]] != i or self.alpha[i] == i for i in range(n)):
            raise ValueError("alpha is not a fixed-point-free involution")

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @classmethod
    def with_standard_alpha(cls, sigma) -> "DartMap":
        """Pairs darts (0 1)(2 3)...."""
        sigma = tuple(sigma)
        return cls(sigma, tuple(i ^ 1 for i in range(len(sigma))))

    def vertices(self) -> int:
        return count_cycles(self.sigma)

    def faces(self) -> int:
        return count_cycles(tuple(self.sigma[a] for a in self.alpha))

    def is_connected(self) -> bool:
        return _connected(self.sigma, self.alpha)


def count_cycles(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def _connected(sigma, alpha) -> bool:
    n = len(sigma)
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        x = stack.pop()
        for y in (sigma[x], alpha[x]):
            if not seen[y]:
                seen[y] = True
                reached += 1
                stack.append(y)
    return reached == n


def genus_of(m: DartMap) -> int:
    if not m.is_connected():
        raise ValueError("genus is only defined for connected maps")
    twice = 2 - m.vertices() + m.dart_count // 2 - m.faces()
    if twice % 2 or twice < 0:
        raise ArithmeticError(f"bad Euler characteristic for {m}")
    return twice // 2


def _matchings(n: int):
    """All perfect matchings of range(n) as involution tuples."""
    alpha = [-1] * n

    def rec():
        try:
            i = alpha.index(-1)
        except ValueError:
            yield tuple(alpha)
            return
        for j in range(i + 1, n):
            if alpha[j] == -1:
                alpha[i], alpha[j] = j, i
                yield from rec()
                alpha[i] = alpha[j] = -1

    yield from rec()


def _check_budget(darts: int, max_darts: int) -> None:
    if darts > max_darts:
        raise BudgetExceeded(f"{darts} darts exceeds the enumeration budget of {max_darts}")


def _canonical_sigma(blocks):
    """Consecutive cycles of the given lengths; returns sigma and the block start offsets."""
    sigma, starts, pos = [], [], 0
    for length in blocks:
        starts.append(pos)
        sigma.extend(pos + (k + 1) % length for k in range(length))
        pos += length
    return tuple(sigma), starts


def _normalise_spec(degree_spec, n: int):
    """A list of coloured cycle types ``((degree, colour), ...)`` matching the spec."""
    darts = 2 * n
    if degree_spec is None:
        return [tuple((d, 0) for d in p) for p in _partitions(darts)]
    if isinstance(degree_spec, int):
        if degree_spec < 1 or darts % degree_spec:
            return []
        return [tuple((degree_spec, 0) for _ in range(darts // degree_spec))]
    cells = tuple(sorted(((d, 0) if isinstance(d, int) else tuple(d) for d in degree_spec),
                         key=lambda cell: (cell[0], str(cell[1]))))
    if sum(d for d, _ in cells) != darts:
        return []
    return [cells]


def _partitions(total: int, largest: int | None = None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def _centralizer_order(cells) -> int:
    z = 1
    for (d, _), c in Counter(cells).items():
        z *= d**c * math.factorial(c)
    return z


@lru_cache(maxsize=256)
def _valid_matchings(cells, genus) -> tuple[tuple[int, ...], ...]:
    sigma, _ = _canonical_sigma([d for d, _ in cells])
    darts = len(sigma)
    v = len(cells)
    out = []
    for alpha in _matchings(darts):
        if not _connected(sigma, alpha):
            continue
        if genus is not None:
            f = count_cycles(tuple(sigma[a] for a in alpha))
            if 2 - v + darts // 2 - f != 2 * genus:
                continue
        out.append(alpha)
    return tuple(out)


def count_rooted_oracle(genus, degree_spec, n: int, max_darts: int = DEFAULT_MAX_DARTS,
                        rootable=None) -> int:
    """Rooted maps with ``n`` edges by direct enumeration.

    ``degree_spec`` is ``None`` (any degrees), an int ``r`` (every vertex of
    degree r) or a multiset of vertex degrees; entries may also be
    ``(degree, colour)`` pairs, where vertices of different colours are
    never identified.  ``genus=None`` accepts every genus.  ``rootable``
    restricts roots to vertices whose colour is in that set.
    """
    _check_budget(2 * n, max_darts)
    if n < 1:
        raise ValueError(f"need at least one edge, got {n}")
    total = 0
    for cells in _normalise_spec(degree_spec, n):
        good = len(_valid_matchings(cells, genus))
        roots = sum(d for d, c in cells if rootable is None or c in rootable)
        total += exact_div(good * roots, _centralizer_order(cells))
    return total


def _generators(cells):
    """Generators of the colour-preserving centralizer of the canonical sigma."""
    sigma, starts = _canonical_sigma([d for d, _ in cells])
    darts = len(sigma)
    groups: dict[tuple, list[int]] = {}
    for idx, cell in enumerate(cells):
        groups.setdefault(cell, []).append(idx)
    gens = []
    for (d, _), members in groups.items():
        first = starts[members[0]]
        rotate = list(range(darts))
        for k in range(d):
            rotate[first + k] = first + (k + 1) % d
        gens.append(tuple(rotate))
        if len(members) > 1:
            # a block cycle and a block transposition generate all block permutations
            cycle = list(range(darts))
            for pos, b in enumerate(members):
                target = starts[members[(pos + 1) % len(members)]]
                for k in range(d):
                    cycle[starts[b] + k] = target + k
            gens.append(tuple(cycle))
            swap = list(range(darts))
            a, b = starts[members[0]], starts[members[1]]
            for k in range(d):
                swap[a + k], swap[b + k] = b + k, a + k
            gens.append(tuple(swap))
    return gens


def _conjugate(alpha, g):
    out = [0] * len(alpha)
    for x, y in enumerate(alpha):
        out[g[x]] = g[y]
    return tuple(out)


def count_sensed_oracle(genus, degree_spec, n: int, max_darts: int = DEFAULT_MAX_DARTS) -> int:
    """Maps with ``n`` edges up to orientation-preserving isomorphism."""
    _check_budget(2 * n, max_darts)
    if n < 1:
        raise ValueError(f"need at least one edge, got {n}")
    total = 0
    for cells in _normalise_spec(degree_spec, n):
        matchings = _valid_matchings(cells, genus)
        index = {a: i for i, a in enumerate(matchings)}
        parent = list(range(len(matchings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        gens = _generators(cells)
        for i, a in enumerate(matchings):
            for g in gens:
                j = index[_conjugate(a, g)]
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        total += sum(1 for i in range(len(matchings)) if find(i) == i)
    return total


def constrained_oracle(r: int, special_degrees, leaves: int, e_total: int,
                       max_darts: int = DEFAULT_MAX_DARTS) -> int:
    """Oracle twin of :func:`mapcensus.orbifolds.constrained_sphere_count`."""
    darts = 2 * e_total
    _check_budget(darts, max_darts)
    fixed = sum(special_degrees) + leaves
    spare = darts - fixed
    if e_total < 1 or spare < 0 or spare % r:
        return 0
    spec = ([(r, "regular")] * (spare // r)
            + [(d, "special") for d in special_degrees]
            + [(1, "leaf")] * leaves)
    return count_rooted_oracle(0, spec, e_total, max_darts, rootable={"regular", "special"})


def near_regular_oracle(genus, r: int, d: int, n: int, second: int | None = None,
                        max_darts: int = DEFAULT_MAX_DARTS) -> int:
    """Oracle for a recurrence cell: root vertex of degree ``d``, the rest of degree ``r``.

    With ``second`` set, one further distinguished vertex has that degree
    (the two-root tables).
    """
    _check_budget(2 * n, max_darts)
    fixed = d + (second or 0)
    spare = 2 * n - fixed
    if n < 1 or d < 1 or spare < 0 or spare % r:
        return 0
    spec = [(d, "root")] + [(r, "regular")] * (spare // r)
    if second is not None:
        spec.append((second, "second"))
    return count_rooted_oracle(genus, spec, n, max_darts, rootable={"root"})

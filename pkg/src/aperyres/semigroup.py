"""Numerical semigroups, Apery sets and the exponent tables c, b."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import EmptyGenerators, MultiplicityTooSmall, NotCofinite


def _apery_elements(gens, m):
    # Dijkstra on residues mod m; each generator g moves class r to r + g.
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    steps = [g for g in gens if g % m]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in steps:
            s = (r + g) % m
            nd = d + g
            if dist[s] is None or nd < dist[s]:
                dist[s] = nd
                heapq.heappush(heap, (nd, s))
    return tuple(dist)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of the nonnegative integers.

    ``witness[r]`` is the least element of S congruent to r mod m, which
    makes membership a constant-time test.
    """

    generators: tuple[int, ...]
    multiplicity: int
    minimal_generators: tuple[int, ...]
    witness: tuple[int, ...]

    def __contains__(self, n):
        return contains(self, n)

    def __str__(self):
        return "<" + ", ".join(map(str, self.minimal_generators)) + ">"

    @property
    def m(self):
        return self.multiplicity


def from_generators(gens) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise NotCofinite(f"gcd of {gens} is {reduce(gcd, gens)}, complement is infinite")
    m = gens[0]
    witness = _apery_elements(gens, m)

    def member(n):
        return n >= 0 and n >= witness[n % m]

    # g is a sum of two nonzero elements iff g - h is in S for a smaller generator h
    minimal = tuple(
        g for k, g in enumerate(gens) if not any(member(g - h) for h in gens[:k])
    )
    return NumericalSemigroup(tuple(gens), m, minimal, witness)


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    return n >= S.witness[n % S.multiplicity]


@dataclass(frozen=True)
class AperyTable:
    """Apery data of a semigroup of multiplicity m >= 2.

    ``a[0]`` is m by convention and ``a[i]`` the Apery element of class i.
    ``c`` and ``b`` are full (m-1) x (m-1) tables; use :meth:`cij` and
    :meth:`bij` for 1-based access.
    """

    m: int
    a: tuple[int, ...]
    c: tuple[tuple[int, ...], ...]
    b: tuple[tuple[int, ...], ...]

    def cij(self, i, j):
        return self.c[i - 1][j - 1]

    def bij(self, i, j):
        return self.b[i - 1][j - 1]

    @classmethod
    def from_values(cls, a, check=True):
        """Build the table from ``a = (m, a_1, ..., a_{m-1})``.

        With ``check=False`` non-integral or negative c values are floored
        instead of rejected, which is handy for building deliberately broken
        tables in mutation tests.
        """
        a = tuple(int(v) for v in a)
        m = a[0]
        if m < 2:
            raise MultiplicityTooSmall(f"Apery tables need m >= 2, got {m}")
        c, b = [], []
        for i in range(1, m):
            crow, brow = [], []
            for j in range(1, m):
                num = a[i] + a[j] - a[(i + j) % m]
                if check and (num % m or num < 0):
                    raise ValueError(f"c_{i},{j} = {num}/{m} is not a nonnegative integer")
                cij = num // m
                crow.append(cij)
                brow.append(cij + 1 if i + j == m else cij)
            c.append(tuple(crow))
            b.append(tuple(brow))
        return cls(m, a, tuple(c), tuple(b))

    def with_c(self, i, j, value):
        """Copy with c_{i,j} = c_{j,i} = value (b updated to match); for mutation tests."""
        c = [list(r) for r in self.c]
        b = [list(r) for r in self.b]
        for p, q in ((i, j), (j, i)):
            c[p - 1][q - 1] = value
            b[p - 1][q - 1] = value + 1 if p + q == self.m else value
        return AperyTable(self.m, self.a, tuple(map(tuple, c)), tuple(map(tuple, b)))


def apery(S: NumericalSemigroup) -> AperyTable:
    m = S.multiplicity
    if m < 2:
        raise MultiplicityTooSmall("the Apery construction requires multiplicity >= 2")
    return AperyTable.from_values((m,) + S.witness[1:])


def apery_set(S: NumericalSemigroup) -> tuple[int, ...]:
    """Ap(S) listed by residue class: (0, a_1, ..., a_{m-1})."""
    return S.witness


def is_med(S: NumericalSemigroup) -> bool:
    if S.multiplicity < 2:
        raise MultiplicityTooSmall("MED is defined for multiplicity >= 2")
    return len(S.minimal_generators) == S.multiplicity


def extraneous_indices(S: NumericalSemigroup) -> list[int]:
    """Residues w whose Apery element is not a minimal generator."""
    mins = set(S.minimal_generators)
    return [w for w in range(1, S.multiplicity) if S.witness[w] not in mins]


def semigroup_series(S: NumericalSemigroup, bound: int) -> list[int]:
    return [1 if contains(S, n) else 0 for n in range(bound + 1)]

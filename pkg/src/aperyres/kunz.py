"""Kunz cone membership and face signatures."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidAperyVector, MultiplicityMismatch, NotInCone
from .semigroup import AperyTable, NumericalSemigroup, apery, from_generators


@dataclass(frozen=True)
class KunzPoint:
    m: int
    z: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.z) != self.m - 1:
            raise ValueError(f"a point of C_{self.m} has {self.m - 1} coordinates, got {len(self.z)}")
        if any(v < 0 for v in self.z):
            raise ValueError("Kunz coordinates are nonnegative")

    @classmethod
    def of(cls, m, z):
        return cls(m, tuple(Fraction(v) for v in z))

    def coord(self, i):
        return self.z[i - 1]


@dataclass(frozen=True)
class FaceSignature:
    """Set of facets ``z_i + z_j = z_{i+j}`` (pairs i <= j, i + j != m) that are tight."""

    m: int
    tight: frozenset

    def __str__(self):
        if not self.tight:
            return "{}"
        return "{" + ", ".join(f"({i},{j})" for i, j in sorted(self.tight)) + "}"

    def sorted_pairs(self):
        return sorted(self.tight)


def facet_pairs(m):
    return [(i, j) for i in range(1, m) for j in range(i, m) if i + j != m]


def kunz_point(t: AperyTable) -> KunzPoint:
    return KunzPoint.of(t.m, t.a[1:])


def _slack(p, i, j):
    return p.coord(i) + p.coord(j) - p.coord((i + j) % p.m)


def in_cone(p: KunzPoint) -> bool:
    return all(_slack(p, i, j) >= 0 for i, j in facet_pairs(p.m))


def face_signature(p: KunzPoint) -> FaceSignature:
    tight = set()
    for i, j in facet_pairs(p.m):
        s = _slack(p, i, j)
        if s < 0:
            raise NotInCone(f"facet z_{i} + z_{j} >= z_{(i + j) % p.m} violated by {p.z}")
        if s == 0:
            tight.add((i, j))
    return FaceSignature(p.m, frozenset(tight))


def validate_apery_vector(z, m) -> bool:
    z = tuple(z)
    if m < 2 or len(z) != m - 1:
        return False
    if any(int(v) != v or v < 1 or v % m != i for i, v in enumerate(z, start=1)):
        return False
    return in_cone(KunzPoint.of(m, z))


def semigroup_from_point(z, m) -> NumericalSemigroup:
    z = tuple(int(v) for v in z)
    if not validate_apery_vector(z, m):
        raise InvalidAperyVector(f"{z} is not an Apery coordinate vector for m = {m}")
    S = from_generators((m,) + z)
    assert S.witness[1:] == z
    return S


def signature_of(S: NumericalSemigroup) -> FaceSignature:
    return face_signature(kunz_point(apery(S)))


def same_face(S: NumericalSemigroup, T: NumericalSemigroup) -> bool:
    if S.multiplicity != T.multiplicity:
        raise MultiplicityMismatch(
            f"multiplicities differ: {S.multiplicity} vs {T.multiplicity}"
        )
    return signature_of(S) == signature_of(T)

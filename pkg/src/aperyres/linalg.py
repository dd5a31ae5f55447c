"""Exact rank and kernel computations for sparse scalar matrices.

Vectors are dicts ``index -> coefficient`` over any orderable index set.
Rational arithmetic is done fraction-free on integers (denominators are
cleared up front, rows are divided by their content after each update).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

RATIONAL = "rational"


@dataclass(frozen=True)
class Field:
    """Coefficient field for rank computations: the rationals, or GF(p)."""

    prime: int | None = None

    @property
    def is_rational(self):
        return self.prime is None

    def __str__(self):
        return RATIONAL if self.prime is None else f"prime:{self.prime}"


QQ = Field()


def parse_field(spec: str) -> Field:
    if spec in (None, "", RATIONAL):
        return QQ
    if spec.startswith("prime:"):
        p = int(spec.split(":", 1)[1])
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        return Field(p)
    raise ValueError(f"unknown field {spec!r}; use 'rational' or 'prime:p'")


def _integral(vec):
    """Scale a rational vector to a primitive integer vector."""
    dens = [v.denominator for v in vec.values() if isinstance(v, Fraction)]
    if dens:
        L = reduce(lcm, dens, 1)
        vec = {k: int(v * L) for k, v in vec.items()}
    g = reduce(gcd, vec.values(), 0)
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
    return vec


class Echelon:
    """Incrementally maintained echelon basis of a span.

    Each stored vector is keyed by its pivot, the least index in its support;
    reducing a new vector only ever removes its current pivot, so fill-in is
    pushed towards larger indices and the loop terminates.
    """

    def __init__(self, field: Field = QQ):
        self.field = field
        self.basis = {}

    def __len__(self):
        return len(self.basis)

    def reduce(self, vec):
        p = self.field.prime
        if p is None:
            vec = _integral({k: v for k, v in vec.items() if v})
        else:
            vec = {k: int(v % p) if not isinstance(v, Fraction) else
                   v.numerator * pow(v.denominator, -1, p) % p for k, v in vec.items()}
            vec = {k: v for k, v in vec.items() if v}
        while vec:
            piv = min(vec)
            row = self.basis.get(piv)
            if row is None:
                return piv, vec
            a, b = row[piv], vec[piv]
            if p is None:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                new = {k: fa * v for k, v in vec.items()}
                for k, v in row.items():
                    w = new.get(k, 0) - fb * v
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                vec = _integral(new) if new else new
            else:
                f = b * pow(a, -1, p) % p
                new = dict(vec)
                for k, v in row.items():
                    w = (new.get(k, 0) - f * v) % p
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                vec = new
        return None, vec

    def add(self, vec) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        piv, red = self.reduce(vec)
        if piv is None:
            return False
        self.basis[piv] = red
        return True

    def __contains__(self, vec):
        return self.reduce(vec)[0] is None


def rank(vectors, field: Field = QQ) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return len(ech)


def nullspace(columns, ncols):
    """Basis of {x : sum_j x_j * columns[j] = 0} over Q.

    ``columns`` is a list of ``ncols`` sparse vectors; the result is a list of
    dicts ``j -> Fraction``. Dense Gauss-Jordan; meant for small components.
    """
    rows = sorted({k for col in columns for k in col})
    ridx = {r: n for n, r in enumerate(rows)}
    M = [[Fraction(0)] * ncols for _ in rows]
    for j, col in enumerate(columns):
        for k, v in col.items():
            M[ridx[k]][j] = Fraction(v)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        x = {fcol: Fraction(1)}
        for i, pc in enumerate(pivots):
            if M[i][fcol] != 0:
                x[pc] = -M[i][fcol]
        basis.append(x)
    return basis

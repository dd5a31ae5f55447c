"""Exact polynomial arithmetic in k[y, x_1, ..., x_{m-1}] and sparse graded matrices.

Monomials are plain exponent tuples; index 0 is the exponent of y = x_0.
Coefficients are ints or Fractions (Fractions with denominator 1 are
normalized back to int so the common +-1 case stays cheap).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ContextMismatch, DimensionMismatch

ANY = "any"  # degree reported for the zero polynomial


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class RingContext:
    """Grading data: ``degrees[i]`` is deg x_i, and ``variables`` lists the
    indices that are live (y is dropped after an artinian reduction)."""

    m: int
    degrees: tuple[int, ...]
    variables: tuple[int, ...] = None

    def __post_init__(self):
        if self.variables is None:
            object.__setattr__(self, "variables", tuple(range(len(self.degrees))))

    @property
    def nvars(self):
        return len(self.degrees)

    def restrict(self, variables):
        return RingContext(self.m, self.degrees, tuple(sorted(variables)))

    def regrade(self, degrees):
        return RingContext(self.m, tuple(degrees), self.variables)


def ring_context(table) -> RingContext:
    return RingContext(table.m, tuple(table.a))


def degree(mono, ctx: RingContext) -> int:
    return sum(e * d for e, d in zip(mono, ctx.degrees))


class Polynomial:
    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                mono = tuple(mono)
                v = t.get(mono, 0) + c
                if v:
                    t[mono] = _norm(v)
                else:
                    t.pop(mono, None)
        self._t = t

    @classmethod
    def _raw(cls, t):
        p = cls.__new__(cls)
        p._t = t
        return p

    @classmethod
    def monomial(cls, mono, coeff=1):
        return cls._raw({tuple(mono): _norm(coeff)} if coeff else {})

    @classmethod
    def var(cls, i, nvars, power=1):
        e = [0] * nvars
        e[i] = power
        return cls._raw({tuple(e): 1})

    @classmethod
    def constant(cls, c, nvars):
        return cls.monomial((0,) * nvars, c)

    @classmethod
    def zero(cls):
        return cls._raw({})

    # container protocol
    def items(self):
        return self._t.items()

    def __iter__(self):
        return iter(self._t.items())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def coeff(self, mono):
        return self._t.get(tuple(mono), 0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._t == other._t
        if other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(other._t) > len(self._t):
            self, other = other, self
        t = dict(self._t)
        for mono, c in other._t.items():
            v = t.get(mono, 0) + c
            if v:
                t[mono] = _norm(v)
            else:
                del t[mono]
        return Polynomial._raw(t)

    def __neg__(self):
        return Polynomial._raw({mono: -c for mono, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({mono: _norm(v * c) for mono, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        t = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(mono, 0) + c1 * c2
                if v:
                    t[mono] = v
                else:
                    del t[mono]
        return Polynomial._raw({k: _norm(v) for k, v in t.items()})

    __rmul__ = scale

    def times_monomial(self, mono, coeff=1):
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(k, mono)): _norm(v * coeff) for k, v in self._t.items()}
        )

    def __pow__(self, n):
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            nv = len(next(iter(self._t))) if self._t else 0
            return Polynomial.constant(1, nv)
        return result

    def is_monomial(self):
        return len(self._t) == 1

    def is_constant(self):
        return len(self._t) == 1 and not any(next(iter(self._t)))

    def constant_term(self):
        for mono, c in self._t.items():
            if not any(mono):
                return c
        return 0

    def uses(self, var):
        return any(mono[var] for mono in self._t)

    def terms(self, ctx: RingContext | None = None):
        """Terms in canonical order: degree, x-degree, x-block lex, then y; descending."""

        def key(item):
            mono = item[0]
            deg = degree(mono, ctx) if ctx else 0
            return (deg, sum(mono[1:]), mono[1:], mono[0])

        return sorted(self._t.items(), key=key, reverse=True)


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def scale(c, p):
    return p.scale(c)


def is_homogeneous(p: Polynomial, ctx: RingContext):
    """Common degree of all terms, ``ANY`` for zero, None when mixed."""
    degs = {degree(mono, ctx) for mono, _ in p.items()}
    if not degs:
        return ANY
    if len(degs) == 1:
        return degs.pop()
    return None


def substitute(p: Polynomial, assignment) -> Polynomial:
    """Simultaneously replace x_i by ``assignment[i]`` (a Polynomial or scalar)."""
    if not assignment or not p:
        return p
    nv = len(next(iter(p._t)))
    images = {}
    for i, v in assignment.items():
        images[i] = v if isinstance(v, Polynomial) else Polynomial.constant(v, nv)
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    out = Polynomial.zero()
    for mono, c in p.items():
        kept = tuple(0 if i in images else e for i, e in enumerate(mono))
        term = Polynomial.monomial(kept, c)
        for i, e in enumerate(mono):
            if e and i in images:
                term = term * power(i, e)
                if not term:
                    break
        out = out + term
    return out


def format_monomial(mono, m=None):
    parts = []
    for i in list(range(1, len(mono))) + [0]:
        e = mono[i]
        if not e:
            continue
        name = "y" if i == 0 else f"x_{i}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Polynomial, ctx: RingContext | None = None) -> str:
    if not p:
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.terms(ctx)):
        neg = c < 0
        a = -c if neg else c
        body = format_monomial(mono)
        if body == "1":
            s = str(a)
        elif a == 1:
            s = body
        else:
            s = f"{a}*{body}"
        if k == 0:
            out.append(("-" if neg else "") + s)
        else:
            out.append((" - " if neg else " + ") + s)
    return "".join(out)


@dataclass(frozen=True, eq=False)
class GradedMatrix:
    """Sparse matrix of a homogeneous map F -> G.

    Columns index basis elements of the source F (degrees ``col_degrees``),
    rows index basis elements of the target G. Entry (r, c) is homogeneous of
    degree ``col_degrees[c] - row_degrees[r]``.
    """

    row_degrees: tuple[int, ...]
    col_degrees: tuple[int, ...]
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v for k, v in self.entries.items() if v}
        object.__setattr__(self, "entries", clean)
        by_col = {}
        for (r, c), v in clean.items():
            by_col.setdefault(c, []).append((r, v))
        for col in by_col.values():
            col.sort(key=lambda rv: rv[0])
        object.__setattr__(self, "_by_col", by_col)

    @property
    def shape(self):
        return len(self.row_degrees), len(self.col_degrees)

    def column(self, c):
        return self._by_col.get(c, [])

    def get(self, r, c):
        return self.entries.get((r, c), Polynomial.zero())

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.row_degrees == other.row_degrees
            and self.col_degrees == other.col_degrees
            and self.entries == other.entries
        )

    def map_entries(self, fn):
        return GradedMatrix(self.row_degrees, self.col_degrees, {k: fn(v) for k, v in self.entries.items()})

    @classmethod
    def identity(cls, degrees, nvars):
        one = Polynomial.constant(1, nvars)
        return cls(tuple(degrees), tuple(degrees), {(i, i): one for i in range(len(degrees))})


def matrix_product(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    if A.col_degrees != B.row_degrees:
        raise DimensionMismatch(
            f"cannot compose {A.shape} with {B.shape}: inner degrees differ"
        )
    out = {}
    for (t, j), q in B.entries.items():
        for i, p in A.column(t):
            key = (i, j)
            v = out.get(key)
            pq = p * q
            out[key] = pq if v is None else v + pq
    return GradedMatrix(A.row_degrees, B.col_degrees, out)


def check_same_context(a: RingContext, b: RingContext):
    if a.degrees != b.degrees or a.m != b.m:
        raise ContextMismatch("complexes live over different graded rings")


@lru_cache(maxsize=None)
def _monomials(degs, b):
    # degs: tuple of (var index, degree), all degrees positive
    if b == 0:
        return ((),)
    if not degs or b < 0:
        return ()
    (i, d), rest = degs[0], degs[1:]
    out = []
    for e in range(b // d + 1):
        for tail in _monomials(rest, b - e * d):
            out.append(((i, e),) + tail if e else tail)
    return tuple(out)


def monomials_of_degree(ctx: RingContext, b: int):
    """All monomials over the live variables of ``ctx`` with internal degree b."""
    degs = tuple((i, ctx.degrees[i]) for i in ctx.variables)
    out = []
    for sparse in _monomials(degs, b):
        e = [0] * ctx.nvars
        for i, k in sparse:
            e[i] = k
        out.append(tuple(e))
    return out

"""Free complexes: the Apery resolution, Koszul complexes, tensor products,
artinian reduction, and generating sets for J_S and I_S."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import (
    ContextMismatch,
    InhomogeneousComplex,
    InhomogeneousInput,
    NonCanonicalBasis,
    NotAMember,
    OutOfRange,
)
from .ring import (
    ANY,
    GradedMatrix,
    Polynomial,
    RingContext,
    is_homogeneous,
    ring_context,
    substitute,
)
from .semigroup import AperyTable, NumericalSemigroup, apery, extraneous_indices

APERY = "apery"
KOSZUL = "koszul"
TENSOR = "tensor"


@dataclass(frozen=True)
class BasisElement:
    """Generator e_{i,A} of F_d; e_{0,()} stands for the generator of F_0."""

    i: int
    A: tuple[int, ...]
    degree: int | None = None

    @property
    def label(self):
        return (self.i, self.A)


@dataclass(frozen=True, eq=False)
class FreeComplex:
    """0 <- F_0 <- F_1 <- ... <- F_L with ``maps[d-1]`` the boundary F_d -> F_{d-1}.

    ``labels[d]`` names the basis of F_d and ``degrees[d]`` gives the internal
    degree of each basis element.
    """

    ctx: RingContext
    labels: tuple[tuple, ...]
    degrees: tuple[tuple[int, ...], ...]
    maps: tuple[GradedMatrix, ...]
    kind: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def length(self):
        return len(self.maps)

    def ranks(self):
        return tuple(len(l) for l in self.labels)

    def boundary(self, d) -> GradedMatrix:
        return self.maps[d - 1]

    def max_degree(self):
        return max((d for degs in self.degrees for d in degs), default=0)

    def __eq__(self, other):
        if not isinstance(other, FreeComplex):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.labels == other.labels
            and self.degrees == other.degrees
            and len(self.maps) == len(other.maps)
            and all(a == b for a, b in zip(self.maps, other.maps))
        )


# ---------------------------------------------------------------- Apery basis


def module_basis(m: int, d: int, table: AperyTable | None = None) -> list[BasisElement]:
    """Basis of F_d ordered by (A lexicographic, then i)."""
    if m < 2 or d < 0 or d > m - 1:
        raise OutOfRange(f"need 2 <= m and 0 <= d <= m-1, got m={m}, d={d}")
    if d == 0:
        return [BasisElement(0, (), 0)]
    out = []
    for A in combinations(range(1, m), d):
        for i in range(A[0], m):
            deg = None
            if table is not None:
                deg = table.a[i] + sum(table.a[j] for j in A)
            out.append(BasisElement(i, A, deg))
    return out


def rank_formula(m, d):
    return 1 if d == 0 else d * comb(m, d + 1)


def sign_in(j: int, A) -> int:
    A = sorted(A)
    if j not in A:
        raise NotAMember(f"{j} is not in {A}")
    return -1 if A.index(j) % 2 else 1


def rewrite_basis(i: int, A) -> list[tuple[int, tuple]]:
    """Express the formal symbol e_{i,A} over canonical basis labels.

    Returns a list of ``(sign, (i', A'))`` with i' >= min(A'); the empty list
    is zero.
    """
    A = tuple(sorted(A))
    if i == 0:
        return []
    if not A or i >= A[0]:
        return [(1, (i, A))]
    out = []
    for t, j in enumerate(A):
        rest = tuple(sorted(set(A) - {j} | {i}))
        out.append((-1 if t % 2 else 1, (j, rest)))
    return out


def _y_power(nvars, e):
    return Polynomial.var(0, nvars, e) if e else Polynomial.constant(1, nvars)


def boundary_column(d: int, e: BasisElement, t: AperyTable) -> dict:
    """Image of e under the boundary, as ``{target label: Polynomial}``.

    For d = 1 the target is the single generator ``(0, ())`` of F_0.
    """
    m = t.m
    i, A = e.i, tuple(e.A)
    if len(A) != d or not 1 <= i < m or (A and i < A[0]) or any(not 1 <= j < m for j in A):
        raise NonCanonicalBasis(f"e_{i},{A} is not a canonical basis element of F_{d}")
    n = m
    if d == 1:
        j = A[0]
        x = Polynomial.var
        poly = x(i, n) * x(j, n) - _y_power(n, t.cij(i, j)) * x((i + j) % m, n)
        return {(0, ()): poly}
    col = {}
    for pos, j in enumerate(A):
        s = -1 if pos % 2 else 1
        rest = A[:pos] + A[pos + 1:]
        targets = [
            (s, Polynomial.var(j, n), i),
            (-s, _y_power(n, t.bij(i, j)), (i + j) % m),
        ]
        for sign, coeff, k in targets:
            for s2, label in rewrite_basis(k, rest):
                prev = col.get(label)
                term = coeff.scale(sign * s2)
                col[label] = term if prev is None else prev + term
    col = {k: v for k, v in col.items() if v}
    for label, v in col.items():
        if not v.is_monomial():
            raise AssertionError(f"entry {v} at {label} of d_{d}(e_{i},{A}) is not a monomial")
    return col


def build_apery_complex(S_or_table) -> FreeComplex:
    t = S_or_table if isinstance(S_or_table, AperyTable) else apery(S_or_table)
    m = t.m
    ctx = ring_context(t)
    bases = [module_basis(m, d, t) for d in range(m)]
    labels = tuple(tuple(e.label for e in B) for B in bases)
    degrees = tuple(tuple(e.degree for e in B) for B in bases)
    maps = []
    for d in range(1, m):
        index = {lab: k for k, lab in enumerate(labels[d - 1])}
        entries = {}
        for c, e in enumerate(bases[d]):
            for lab, poly in boundary_column(d, e, t).items():
                entries[(index[lab], c)] = poly
        maps.append(GradedMatrix(degrees[d - 1], degrees[d], entries))
    return FreeComplex(ctx, labels, degrees, tuple(maps), APERY, {"table": t})


# ---------------------------------------------------------------- generators


def j_generators(S_or_table) -> list[Polynomial]:
    """Binomials x_i x_j - y^{c_ij} x_{i+j}, 1 <= i <= j <= m-1, in basis order."""
    t = S_or_table if isinstance(S_or_table, AperyTable) else apery(S_or_table)
    return [boundary_column(1, e, t)[(0, ())] for e in module_basis(t.m, 1, t)]


def extraneous_factorizations(S: NumericalSemigroup) -> dict[int, tuple[int, int]]:
    """For each extraneous residue w, the least (u, v), u <= v, u + v = w mod m, c_uv = 0."""
    t = apery(S)
    m = t.m
    out = {}
    for w in extraneous_indices(S):
        for u in range(1, m):
            v = next((v for v in range(u, m) if (u + v) % m == w and t.cij(u, v) == 0), None)
            if v is not None:
                out[w] = (u, v)
                break
        else:
            raise AssertionError(f"no two-factor witness for extraneous a_{w}")
    return out


def extraneous_binomials(S: NumericalSemigroup) -> list[Polynomial]:
    m = S.multiplicity
    x = Polynomial.var
    return [x(u, m) * x(v, m) - x(w, m) for w, (u, v) in sorted(extraneous_factorizations(S).items())]


def minimal_variable_assignment(S: NumericalSemigroup) -> dict[int, Polynomial]:
    """x_w -> monomial in minimal-generator variables, for every extraneous w."""
    m = S.multiplicity
    fac = extraneous_factorizations(S)
    x = Polynomial.var
    assignment = {w: x(u, m) * x(v, m) for w, (u, v) in fac.items()}
    # factors may themselves be extraneous; substitute until stable
    while True:
        changed = False
        for w, p in assignment.items():
            q = substitute(p, {k: v for k, v in assignment.items() if k != w})
            if q != p:
                assignment[w] = q
                changed = True
        if not changed:
            return assignment


def i_generators(S: NumericalSemigroup) -> list[Polynomial]:
    """Generators of I_S over k[y, x_i : a_i minimal].

    Extraneous variables are eliminated by substitution, zeros and duplicates
    dropped, and then generators lying in the ideal of lower-degree ones are
    pruned degree by degree.
    """
    from .syzygy import minimal_generators

    assignment = minimal_variable_assignment(S)
    seen = []
    for g in j_generators(S):
        h = substitute(g, assignment) if assignment else g
        if h and h not in seen and -h not in seen:
            seen.append(h)
    if not assignment:
        return seen
    ctx = subring_context(S)
    return minimal_generators(seen, ctx)


def subring_context(S: NumericalSemigroup) -> RingContext:
    """k[y, x_i : a_i minimal] inside R."""
    ctx = ring_context(apery(S))
    extraneous = set(extraneous_indices(S))
    return ctx.restrict(i for i in range(ctx.nvars) if i not in extraneous)


# ---------------------------------------------------------------- Koszul, tensor


def koszul_complex(fs, ctx: RingContext) -> FreeComplex:
    """Koszul complex on ``fs``: basis of K_d is the d-subsets T of range(r),
    d(e_T) = sum_k (-1)^k f_{T[k]} e_{T minus T[k]}."""
    fdeg = []
    for f in fs:
        h = is_homogeneous(f, ctx)
        if h is None or h == ANY:
            raise InhomogeneousInput(f"{f} is not a nonzero homogeneous element")
        fdeg.append(h)
    r = len(fs)
    labels, degrees = [], []
    for d in range(r + 1):
        Ts = list(combinations(range(r), d))
        labels.append(tuple(Ts))
        degrees.append(tuple(sum(fdeg[k] for k in T) for T in Ts))
    maps = []
    for d in range(1, r + 1):
        index = {T: n for n, T in enumerate(labels[d - 1])}
        entries = {}
        for c, T in enumerate(labels[d]):
            for k, v in enumerate(T):
                rest = T[:k] + T[k + 1:]
                entries[(index[rest], c)] = fs[v].scale(-1 if k % 2 else 1)
        maps.append(GradedMatrix(degrees[d - 1], degrees[d], entries))
    return FreeComplex(ctx, tuple(labels), tuple(degrees), tuple(maps), KOSZUL, {"r": r})


def unit_complex(ctx: RingContext) -> FreeComplex:
    """R in position 0 and nothing else: the unit for ``tensor``."""
    return FreeComplex(ctx, (((),),), ((0,),), (), KOSZUL, {"r": 0})


def tensor(F: FreeComplex, G: FreeComplex) -> FreeComplex:
    """Total complex of F (x) G with d(f (x) g) = dF(f) (x) g + (-1)^p f (x) dG(g)."""
    if F.ctx.degrees != G.ctx.degrees or F.ctx.m != G.ctx.m:
        raise ContextMismatch("tensor factors live over different rings")
    ctx = RingContext(F.ctx.m, F.ctx.degrees, tuple(sorted(set(F.ctx.variables) | set(G.ctx.variables))))
    L = F.length + G.length
    labels, degrees, index = [], [], []
    for n in range(L + 1):
        labs, degs = [], []
        for p in range(max(0, n - G.length), min(n, F.length) + 1):
            q = n - p
            for a, da in zip(F.labels[p], F.degrees[p]):
                for b, db in zip(G.labels[q], G.degrees[q]):
                    labs.append((p, a, b))
                    degs.append(da + db)
        labels.append(tuple(labs))
        degrees.append(tuple(degs))
        index.append({lab: k for k, lab in enumerate(labs)})
    maps = []
    for n in range(1, L + 1):
        entries = {}
        for c, (p, a, b) in enumerate(labels[n]):
            q = n - p
            if p >= 1:
                ia = F.labels[p].index(a)
                for r, poly in F.maps[p - 1].column(ia):
                    entries[(index[n - 1][(p - 1, F.labels[p - 1][r], b)], c)] = poly
            if q >= 1:
                ib = G.labels[q].index(b)
                sgn = -1 if p % 2 else 1
                for r, poly in G.maps[q - 1].column(ib):
                    key = (index[n - 1][(p, a, G.labels[q - 1][r])], c)
                    entries[key] = entries.get(key, Polynomial.zero()) + poly.scale(sgn)
        maps.append(GradedMatrix(degrees[n - 1], degrees[n], entries))
    return FreeComplex(ctx, tuple(labels), tuple(degrees), tuple(maps), TENSOR)


def artinian_reduction(F: FreeComplex) -> FreeComplex:
    """Set y = 0 in every boundary; the result lives over k[x_1, ..., x_{m-1}]."""
    kill = {0: 0}
    maps = tuple(M.map_entries(lambda p: substitute(p, kill)) for M in F.maps)
    ctx = F.ctx.restrict(v for v in F.ctx.variables if v != 0)
    return FreeComplex(ctx, F.labels, F.degrees, maps, F.kind, dict(F.meta, reduced=True))


def regrade(F: FreeComplex, ctx: RingContext) -> FreeComplex:
    """Recompute basis degrees for a new grading, keeping F_0 degrees.

    Each basis element's degree is read off a nonzero entry of its column;
    all entries must agree or InhomogeneousComplex is raised.
    """
    degrees = [tuple(F.degrees[0])]
    maps = []
    for d, M in enumerate(F.maps, start=1):
        rows = degrees[-1]
        cols = []
        for c in range(len(F.labels[d])):
            found = None
            for r, poly in M.column(c):
                h = is_homogeneous(poly, ctx)
                if h is None:
                    raise InhomogeneousComplex(f"entry ({r},{c}) of d_{d} is inhomogeneous")
                if h == ANY:
                    continue
                deg = rows[r] + h
                if found is not None and found != deg:
                    raise InhomogeneousComplex(f"column {c} of d_{d} has no consistent degree")
                found = deg
            if found is None:
                raise InhomogeneousComplex(f"column {c} of d_{d} is zero; degree undetermined")
            cols.append(found)
        degrees.append(tuple(cols))
        maps.append(GradedMatrix(rows, tuple(cols), M.entries))
    return FreeComplex(ctx, F.labels, tuple(degrees), tuple(maps), F.kind, dict(F.meta))

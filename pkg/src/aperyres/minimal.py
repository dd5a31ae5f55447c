"""Minimalization of homogeneous resolutions and Betti numbers via Tor."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import FreeComplex, build_apery_complex
from .errors import DivisionNotExact, InhomogeneousComplex, NotAComplex, NotSameFace
from .kunz import same_face, signature_of
from .linalg import QQ, Field, rank
from .ring import ANY, GradedMatrix, is_homogeneous, matrix_product
from .semigroup import NumericalSemigroup, apery, extraneous_indices

QUOTIENT = "quotient"
IDEAL = "ideal"


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers; ``graded`` maps (homological d, internal b) -> beta_{d,b}."""

    convention: str
    total: tuple[int, ...]
    graded: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.convention, self.total, self.graded) == (other.convention, other.total, other.graded)

    def to_ideal(self) -> BettiTable:
        if self.convention == IDEAL:
            return self
        graded = {(d - 1, b): v for (d, b), v in self.graded.items() if d >= 1}
        return BettiTable(IDEAL, tuple(self.total[1:]), graded)

    def to_quotient(self) -> BettiTable:
        if self.convention == QUOTIENT:
            return self
        graded = {(d + 1, b): v for (d, b), v in self.graded.items()}
        graded[(0, 0)] = 1
        return BettiTable(QUOTIENT, (1,) + tuple(self.total), graded)


# ---------------------------------------------------------------- minimalize


def _inverse(c):
    if c in (1, -1):
        return c
    return 1 / Fraction(c)


class _Sparse:
    """Mutable sparse matrix kept in both row and column dicts."""

    def __init__(self, M: GradedMatrix):
        self.row_deg = M.row_degrees
        self.col_deg = M.col_degrees
        self.rows = {}
        self.cols = {}
        for (r, c), p in M.entries.items():
            self.rows.setdefault(r, {})[c] = p
            self.cols.setdefault(c, {})[r] = p

    def get(self, r, c):
        return self.rows.get(r, {}).get(c)

    def set(self, r, c, p):
        if p:
            self.rows.setdefault(r, {})[c] = p
            self.cols.setdefault(c, {})[r] = p
        else:
            self.rows.get(r, {}).pop(c, None)
            self.cols.get(c, {}).pop(r, None)

    def add_to(self, r, c, p):
        cur = self.get(r, c)
        self.set(r, c, p if cur is None else cur + p)

    def is_constant_at(self, r, c):
        p = self.get(r, c)
        return bool(p) and self.row_deg[r] == self.col_deg[c] and p.is_constant()

    def constants(self):
        out = []
        for r in sorted(self.rows):
            for c in sorted(self.rows[r]):
                if self.is_constant_at(r, c):
                    out.append((r, c))
        return out

    def add_col_multiple(self, dst, src, factor):
        """column dst += factor * column src."""
        for r, p in list(self.cols.get(src, {}).items()):
            self.add_to(r, dst, p * factor)

    def add_row_multiple(self, dst, src, factor):
        """row dst += factor * row src."""
        for c, p in list(self.rows.get(src, {}).items()):
            self.add_to(dst, c, p * factor)

    def freeze(self, keep_rows, keep_cols):
        ri = {r: n for n, r in enumerate(keep_rows)}
        ci = {c: n for n, c in enumerate(keep_cols)}
        entries = {}
        for r, row in self.rows.items():
            for c, p in row.items():
                if r in ri and c in ci:
                    entries[(ri[r], ci[c])] = p
        return GradedMatrix(
            tuple(self.row_deg[r] for r in keep_rows),
            tuple(self.col_deg[c] for c in keep_cols),
            entries,
        )


def check_homogeneous_complex(F: FreeComplex):
    for d, M in enumerate(F.maps, start=1):
        for (r, c), p in M.entries.items():
            h = is_homogeneous(p, F.ctx)
            if h is None or (h != ANY and h != M.col_degrees[c] - M.row_degrees[r]):
                raise InhomogeneousComplex(f"entry ({r},{c}) of d_{d} has the wrong degree")
    for d in range(1, F.length):
        if not matrix_product(F.maps[d - 1], F.maps[d]).is_zero():
            raise NotAComplex(f"d_{d} * d_{d + 1} != 0")


@dataclass
class PivotStep:
    """One elimination in the sweep: which matrix, which phase, which pivot,
    and where the constant entries of the two touched matrices sat beforehand."""

    matrix: int
    phase: int
    pivot: tuple[int, int]
    constants: tuple


def minimalize(F: FreeComplex, trace: list | None = None, check: bool = True) -> FreeComplex:
    """Strip unit summands by homogeneous row/column operations.

    Sweep i = 1, 2, ...: phase 1 uses each pivot constant of M_i to clear its
    row (compensating row operations on M_{i+1}); phase 2 picks constants of
    M_{i+1} row-major, each in a fresh row and column, and clears their
    columns (compensating column operations on M_i). Pivot rows and columns
    are then dropped. Operations only ever pair existing entries, so the
    schedule is determined by where the constants sit.
    """
    if check:
        check_homogeneous_complex(F)
    L = F.length
    M = [None] + [_Sparse(A) for A in F.maps]  # 1-based
    pivots = {i: [] for i in range(1, L + 2)}

    def snapshot(i):
        return tuple(
            (k, tuple(M[k].constants())) for k in (i, i + 1) if 1 <= k <= L
        )

    def phase2(i):
        # pivots in M_{i+1}; compensation on M_i
        A = M[i + 1]
        used_r, used_c = set(), set()
        while True:
            cand = next(
                ((r, c) for r, c in A.constants() if r not in used_r and c not in used_c),
                None,
            )
            if cand is None:
                break
            if trace is not None:
                trace.append(PivotStep(i + 1, 2, cand, snapshot(i)))
            R1, C = cand
            inv = _inverse(A.get(R1, C).constant_term())
            for R2, f in list(A.cols.get(C, {}).items()):
                if R2 == R1:
                    continue
                factor = f.scale(inv)
                A.add_row_multiple(R2, R1, -factor)
                if i >= 1:
                    M[i].add_col_multiple(R1, R2, factor)
            used_r.add(R1)
            used_c.add(C)
            pivots[i + 1].append(cand)

    def phase1(i):
        A = M[i]
        for R, C1 in pivots[i]:
            inv = _inverse(A.get(R, C1).constant_term())
            if trace is not None:
                trace.append(PivotStep(i, 1, (R, C1), snapshot(i)))
            for C2, f in list(A.rows.get(R, {}).items()):
                if C2 == C1:
                    continue
                factor = f.scale(inv)
                A.add_col_multiple(C2, C1, -factor)
                if i + 1 <= L:
                    M[i + 1].add_row_multiple(C1, C2, factor)

    if L >= 1:
        phase2(0)
    for i in range(1, L + 1):
        phase1(i)
        if i + 1 <= L:
            phase2(i)

    # every remaining constant must be an isolated pivot
    for i in range(1, L + 1):
        piv = set(pivots[i])
        for r, c in M[i].constants():
            if (r, c) not in piv:
                raise AssertionError(f"stray constant at ({r},{c}) of d_{i}")
        for r, c in piv:
            if len(M[i].rows.get(r, {})) != 1 or len(M[i].cols.get(c, {})) != 1:
                raise AssertionError(f"pivot ({r},{c}) of d_{i} is not isolated")

    drop = [set() for _ in range(L + 1)]
    for i in range(1, L + 1):
        for r, c in pivots[i]:
            drop[i].add(c)
            drop[i - 1].add(r)
    keep = [[k for k in range(len(F.labels[d])) if k not in drop[d]] for d in range(L + 1)]
    for i in range(1, L + 1):
        piv = set(pivots[i])
        for r, row in M[i].rows.items():
            for c in row:
                if (r in drop[i - 1] or c in drop[i]) and (r, c) not in piv:
                    raise AssertionError(f"entry ({r},{c}) of d_{i} lies in a dropped row or column")
    maps = tuple(M[i].freeze(keep[i - 1], keep[i]) for i in range(1, L + 1))
    labels = tuple(tuple(F.labels[d][k] for k in keep[d]) for d in range(L + 1))
    degrees = tuple(tuple(F.degrees[d][k] for k in keep[d]) for d in range(L + 1))
    # trailing zero modules carry no information
    while maps and not labels[-1]:
        maps, labels, degrees = maps[:-1], labels[:-1], degrees[:-1]
    meta = dict(F.meta, minimal=True, pivots={i: list(p) for i, p in pivots.items() if p})
    return FreeComplex(F.ctx, labels, degrees, maps, F.kind, meta)


def is_minimal(F: FreeComplex) -> bool:
    for M in F.maps:
        for (r, c), p in M.entries.items():
            if M.row_degrees[r] == M.col_degrees[c] and p:
                return False
    return True


# ---------------------------------------------------------------- Betti numbers


def betti_via_tor(F: FreeComplex, field: Field = QQ) -> BettiTable:
    """Graded Betti numbers from F (x) k: only degree-0 (constant) entries survive."""
    L = F.length
    count = {}
    for d, degs in enumerate(F.degrees):
        for b in degs:
            count[(d, b)] = count.get((d, b), 0) + 1
    ranks = {}
    for d, M in enumerate(F.maps, start=1):
        by_deg = {}
        for (r, c), p in M.entries.items():
            if M.row_degrees[r] == M.col_degrees[c]:
                v = p.constant_term()
                if v:
                    by_deg.setdefault(M.col_degrees[c], {}).setdefault(c, {})[r] = v
        for b, cols in by_deg.items():
            ranks[(d, b)] = rank(cols.values(), field)
    graded = {}
    for (d, b), n in count.items():
        v = n - ranks.get((d, b), 0) - ranks.get((d + 1, b), 0)
        if v:
            graded[(d, b)] = v
    total = [0] * (L + 1)
    for (d, b), v in graded.items():
        total[d] += v
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return BettiTable(QUOTIENT, tuple(total), graded)


def betti_polynomial(t: BettiTable) -> tuple[int, ...]:
    """Coefficients of sum_d total[d] t^d, constant term first; () is zero."""
    coeffs = list(t.total)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def format_polynomial_t(coeffs, var="t"):
    if not coeffs:
        return "0"
    parts = []
    for d, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        body = str(c) if not mono else (mono if c == 1 else f"{c}{mono}")
        parts.append(body)
    return " + ".join(parts) if parts else "0"


def divide_by_one_plus_t(coeffs, r):
    """Exact division of an integer polynomial by (1 + t)^r, or DivisionNotExact."""
    q = list(coeffs)
    for _ in range(r):
        if not q:
            break
        out = []
        rem = list(q)
        for d in range(len(q) - 1):
            out.append(rem[d])
            rem[d + 1] -= rem[d]
        if rem[-1] != 0:
            raise DivisionNotExact(f"{format_polynomial_t(coeffs)} is not divisible by (1+t)^{r}")
        q = out
    return tuple(q)


def divide_graded(graded, shifts):
    """Divide sum beta_{d,b} t^d s^b by prod (1 + t s^D) over D in shifts."""
    cur = dict(graded)
    for D in shifts:
        rem = dict(cur)
        out = {}
        top = max((d for d, _ in rem), default=0)
        for d in range(top):
            for (dd, b) in sorted(k for k in rem if k[0] == d):
                v = rem.pop((dd, b))
                if not v:
                    continue
                out[(d, b)] = v
                rem[(d + 1, b + D)] = rem.get((d + 1, b + D), 0) - v
        if any(rem.values()):
            raise DivisionNotExact("graded Betti table is not divisible by the Koszul factor")
        cur = {k: v for k, v in out.items() if v}
    return cur


@dataclass
class KoszulReport:
    r: int
    f: tuple[int, ...]
    g: tuple[int, ...]
    nonnegative: bool
    j_table: BettiTable
    i_table: BettiTable

    @property
    def passed(self):
        return self.nonnegative

    @property
    def ideal_betti(self):
        return tuple(self.g[1:])


def koszul_relation_check(S: NumericalSemigroup, field: Field = QQ, minimal_complex=None) -> KoszulReport:
    """Recover Betti numbers of I_S from those of J_S by dividing out the
    Koszul factor (1 + t)^r, r = number of extraneous Apery elements."""
    Fmin = minimal_complex if minimal_complex is not None else minimalize(build_apery_complex(S))
    jt = betti_via_tor(Fmin, field)
    ext = extraneous_indices(S)
    r = len(ext)
    f = betti_polynomial(jt)
    g = divide_by_one_plus_t(f, r)
    t = apery(S)
    graded = divide_graded(jt.graded, [t.a[w] for w in ext])
    total = [0] * len(g)
    for (d, _), v in graded.items():
        total[d] += v
    if tuple(total) != g:
        raise DivisionNotExact("graded and total Koszul divisions disagree")
    it = BettiTable(QUOTIENT, g, graded)
    return KoszulReport(r, f, g, all(v >= 0 for v in graded.values()), jt, it)


def residue_class_sums(t: BettiTable, m: int) -> dict[int, tuple[int, ...]]:
    """d -> (sum of beta_{d,b} over b = 0 mod m, ..., b = m-1 mod m)."""
    out = {}
    for (d, b), v in t.graded.items():
        row = out.setdefault(d, [0] * m)
        row[b % m] += v
    return {d: tuple(row) for d, row in sorted(out.items())}


# ---------------------------------------------------------------- uniformity


@dataclass
class UniformityReport:
    signature: str
    steps: list = field(default_factory=list)  # (index, matrix, phase, pivot_S, pivot_T, match)
    ranks_s: tuple = ()
    ranks_t: tuple = ()

    @property
    def passed(self):
        return all(s[-1] for s in self.steps) and self.ranks_s == self.ranks_t


def pivot_uniformity_report(S: NumericalSemigroup, T: NumericalSemigroup) -> UniformityReport:
    if not same_face(S, T):
        raise NotSameFace(f"{S} and {T} lie on different faces of the Kunz cone")
    traces = []
    results = []
    for X in (S, T):
        tr = []
        results.append(minimalize(build_apery_complex(X), trace=tr))
        traces.append(tr)
    rep = UniformityReport(str(signature_of(S)), [], results[0].ranks(), results[1].ranks())
    n = max(len(traces[0]), len(traces[1]))
    for k in range(n):
        a = traces[0][k] if k < len(traces[0]) else None
        b = traces[1][k] if k < len(traces[1]) else None
        match = (
            a is not None and b is not None
            and (a.matrix, a.phase, a.pivot, a.constants) == (b.matrix, b.phase, b.pivot, b.constants)
        )
        ref = a or b
        rep.steps.append((k, ref.matrix, ref.phase, a.pivot if a else None, b.pivot if b else None, match))
    return rep

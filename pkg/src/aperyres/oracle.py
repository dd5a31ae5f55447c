"""Independent checks on complexes and Apery data.

Nothing here trusts the constructions under test: exactness is measured by
ranks of scalar matrices in each internal degree, the Euler characteristic
by truncated power series, and the initial-ideal claim by counting standard
monomials against semigroup membership. Passing the degree-wise checks up
to a finite bound is evidence, not a proof.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import APERY, FreeComplex
from .errors import BoundTooSmall
from .linalg import QQ, Field, rank
from .ring import ANY, RingContext, is_homogeneous, matrix_product
from .semigroup import AperyTable, NumericalSemigroup, apery, contains, semigroup_series


@dataclass
class VerificationReport:
    check_name: str
    passed: bool = True
    details: list = field(default_factory=list)
    bound: int | None = None

    def fail(self, **diag):
        self.passed = False
        self.details.append(diag)

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        extra = f" (bound {self.bound})" if self.bound is not None else ""
        return f"{self.check_name}: {status}{extra}"


def default_bound(F: FreeComplex) -> int:
    return F.max_degree() + 2 * F.ctx.m


# ---------------------------------------------------------------- complex


def check_complex(F: FreeComplex) -> VerificationReport:
    """d_d d_{d+1} = 0, homogeneous entries, and monomial entries for d >= 2
    in an unminimized Apery complex."""
    rep = VerificationReport("complex")
    monomial_rule = F.kind == APERY and not F.meta.get("minimal")
    for d, M in enumerate(F.maps, start=1):
        for (r, c), p in M.entries.items():
            h = is_homogeneous(p, F.ctx)
            want = M.col_degrees[c] - M.row_degrees[r]
            if h is None or (h != ANY and h != want):
                rep.fail(map=d, row=r, col=c, problem="degree", expected=want, actual=h)
            if monomial_rule and d >= 2 and not p.is_monomial():
                rep.fail(map=d, row=r, col=c, problem="not a monomial")
    for d in range(1, F.length):
        P = matrix_product(F.maps[d - 1], F.maps[d])
        for (r, c) in sorted(P.entries):
            rep.fail(map=d, row=r, col=c, problem=f"d_{d} d_{d + 1} != 0")
    return rep


# ---------------------------------------------------------------- monomials


class _Monomials:
    """Monomials of each internal degree over the live variables, built by DP
    over the variables one at a time."""

    def __init__(self, ctx: RingContext):
        self.n = ctx.nvars
        self.vars = [(v, ctx.degrees[v]) for v in ctx.variables]
        self.cache = {}

    def _upto(self, k, b):
        # monomials of degree b using only the first k live variables
        if b < 0:
            return []
        if k == 0:
            return [()] if b == 0 else []
        key = (k, b)
        if key in self.cache:
            return self.cache[key]
        _, dv = self.vars[k - 1]
        out = []
        e = 0
        while e * dv <= b:
            for head in self._upto(k - 1, b - e * dv):
                out.append(head + (e,))
            e += 1
        self.cache[key] = out
        return out

    def __call__(self, b):
        res = []
        for sparse in self._upto(len(self.vars), b):
            mono = [0] * self.n
            for (v, _), e in zip(self.vars, sparse):
                mono[v] = e
            res.append(tuple(mono))
        return res


def _component_vectors(M, cols_in_degree, monos, b):
    """Images of (basis e, monomial mu) of degree b as sparse scalar vectors."""
    vecs = []
    for c, dc in cols_in_degree:
        col = M.column(c)
        for mu in monos(b - dc):
            v = {}
            for r, p in col:
                for nu, coeff in p.items():
                    key = (r, tuple(x + y for x, y in zip(mu, nu)))
                    v[key] = v.get(key, 0) + coeff
            vecs.append(v)
    return vecs


def _rank(vectors, field):
    return rank(vectors, field)


def graded_dims(F: FreeComplex, bound: int, monos=None):
    monos = monos or _Monomials(F.ctx)
    return [
        [sum(len(monos(b - dg)) for dg in degs if dg <= b) for degs in F.degrees]
        for b in range(bound + 1)
    ]


def check_exactness_graded(
    F: FreeComplex,
    S: NumericalSemigroup | None = None,
    bound: int | None = None,
    expected_h0=None,
    field: Field = QQ,
) -> VerificationReport:
    """Degree-wise exactness of F in positive positions plus the size of H_0.

    F must be a complex; that is checked first, since the rank counts below
    only equal homology dimensions when consecutive maps compose to zero.

    ``expected_h0(b)`` gives the expected dimension of the cokernel of d_1 in
    degree b; by default it is the indicator of S. With a prime field any
    failing degree is recomputed over the rationals before being reported.
    """
    maxdeg = F.max_degree()
    if bound is None:
        bound = default_bound(F)
    if bound < maxdeg:
        raise BoundTooSmall(f"bound {bound} is below the top basis degree {maxdeg}")
    if expected_h0 is None:
        if S is None:
            raise ValueError("pass S or expected_h0")
        expected_h0 = lambda b: 1 if contains(S, b) else 0
    rep = VerificationReport("exactness", bound=bound)
    # rank counts only measure homology when consecutive maps compose to zero
    for d in range(1, F.length):
        if not matrix_product(F.maps[d - 1], F.maps[d]).is_zero():
            rep.fail(position=d, problem=f"d_{d} d_{d + 1} != 0")
    monos = _Monomials(F.ctx)
    L = F.length

    def degree_failures(b, fld):
        dims = [sum(len(monos(b - dg)) for dg in degs if dg <= b) for degs in F.degrees]
        ranks = [0] * (L + 2)
        for d in range(1, L + 1):
            M = F.maps[d - 1]
            cols = [(c, dg) for c, dg in enumerate(M.col_degrees) if dg <= b]
            if cols and dims[d]:
                ranks[d] = _rank(_component_vectors(M, cols, monos, b), fld)
        fails = []
        for d in range(1, L + 1):
            if dims[d] != ranks[d] + ranks[d + 1]:
                fails.append(dict(degree=b, position=d, expected=0, actual=dims[d] - ranks[d] - ranks[d + 1]))
        h0 = dims[0] - ranks[1]
        want = expected_h0(b)
        if h0 != want:
            fails.append(dict(degree=b, position=0, expected=want, actual=h0))
        return fails

    for b in range(bound + 1):
        fails = degree_failures(b, field)
        if fails and not field.is_rational:
            fails = degree_failures(b, QQ)
        for f in fails:
            rep.fail(**f)
    return rep


# ---------------------------------------------------------------- Euler characteristic


def euler_characteristic_check(F: FreeComplex, S: NumericalSemigroup, bound: int | None = None,
                               expected=None) -> VerificationReport:
    """Compare (sum_d (-1)^d sum_e t^{deg e}) / prod (1 - t^{deg x_i}) with the
    series of S (or ``expected``), both truncated at t^bound."""
    if bound is None:
        bound = default_bound(F)
    series = [0] * (bound + 1)
    for d, degs in enumerate(F.degrees):
        s = -1 if d % 2 else 1
        for g in degs:
            if g <= bound:
                series[g] += s
    for v in F.ctx.variables:
        a = F.ctx.degrees[v]
        for n in range(a, bound + 1):
            series[n] += series[n - a]
    want = expected if expected is not None else semigroup_series(S, bound)
    rep = VerificationReport("euler", bound=bound)
    for n, (x, y) in enumerate(zip(series, want)):
        if x != y:
            rep.fail(degree=n, expected=y, actual=x)
    return rep


# ---------------------------------------------------------------- normal forms


def _pairs(mono, m):
    xs = [i for i in range(1, m) if mono[i]]
    for a, i in enumerate(xs):
        if mono[i] >= 2:
            yield (i, i)
        for j in xs[a + 1:]:
            yield (i, j)


def _rewrite(mono, i, j, t: AperyTable):
    e = list(mono)
    e[i] -= 1
    e[j] -= 1
    e[0] += t.cij(i, j)
    e[(i + j) % t.m] += 1
    return tuple(e)


def normal_form(mono, t: AperyTable, choose=None):
    """Rewrite x_i x_j -> y^{c_ij} x_{i+j} (x_0 = y) until at most one x remains.

    ``choose`` picks among the available pairs (default: the first one).
    """
    mono = tuple(mono)
    while True:
        pairs = list(_pairs(mono, t.m))
        if not pairs:
            return mono
        i, j = choose(pairs) if choose else pairs[0]
        mono = _rewrite(mono, i, j, t)


def all_normal_forms(mono, t: AperyTable) -> set:
    """Terminal monomials over every rewrite order (exhaustive, memoized)."""
    memo = {}

    def go(u):
        if u in memo:
            return memo[u]
        pairs = list(_pairs(u, t.m))
        if not pairs:
            res = {u}
        else:
            res = set()
            for i, j in pairs:
                res |= go(_rewrite(u, i, j, t))
        memo[u] = res
        return res

    return go(tuple(mono))


def check_initial_ideal(S: NumericalSemigroup, bound: int, table: AperyTable | None = None) -> VerificationReport:
    """Standard monomials y^a and x_i y^a, one per element of S in each degree."""
    t = table or apery(S)
    offsets = [0] + list(t.a[1:])
    rep = VerificationReport("initial-ideal", bound=bound)
    for b in range(bound + 1):
        count = sum(1 for o in offsets if b >= o and (b - o) % t.m == 0)
        want = 1 if contains(S, b) else 0
        if count != want:
            rep.fail(degree=b, expected=want, actual=count)
    return rep


def check_generators(S: NumericalSemigroup, table: AperyTable | None = None) -> VerificationReport:
    """Each binomial must be homogeneous and both its terms must share a normal form."""
    from .complexes import j_generators

    true = apery(S)
    ctx = RingContext(true.m, tuple(true.a))
    rep = VerificationReport("generators")
    for k, g in enumerate(j_generators(table or true)):
        h = is_homogeneous(g, ctx)
        if h is None or h == ANY:
            rep.fail(generator=k, problem="inhomogeneous")
            continue
        forms = {normal_form(mono, true) for mono, _ in g.items()}
        if len(forms) != 1 or sum(c for _, c in g.items()) != 0:
            rep.fail(generator=k, problem="terms have different normal forms")
    return rep


# ---------------------------------------------------------------- ideals by degree


def _ideal_vectors(generators, ctx, monos, b):
    vecs = []
    for g in generators:
        h = is_homogeneous(g, ctx)
        if h is None or h == ANY or h > b:
            continue
        for mu in monos(b - h):
            vecs.append({tuple(x + y for x, y in zip(mu, nu)): c for nu, c in g.items()})
    return vecs


def quotient_dims(generators, ctx: RingContext, bound: int, field: Field = QQ) -> list[int]:
    """dim_k (R/I)_b for b = 0..bound, I generated by homogeneous ``generators``."""
    monos = _Monomials(ctx)
    return [len(monos(b)) - rank(_ideal_vectors(generators, ctx, monos, b), field) for b in range(bound + 1)]


def ideals_equal(gens1, gens2, ctx: RingContext, bound: int) -> bool:
    """Compare the degree components of two homogeneous ideals up to ``bound``."""
    monos = _Monomials(ctx)
    for b in range(bound + 1):
        v1 = _ideal_vectors(gens1, ctx, monos, b)
        v2 = _ideal_vectors(gens2, ctx, monos, b)
        r1, r2, r12 = rank(v1), rank(v2), rank(v1 + v2)
        if not (r1 == r2 == r12):
            return False
    return True


def check_artinian_reduction(F: FreeComplex, S: NumericalSemigroup, bound: int | None = None,
                             field: Field = QQ) -> VerificationReport:
    """F with y = 0 must resolve k[x]/(J_S + (y))/(y) over the x-variables.

    The expected cokernel sizes come from the Apery binomials with y = 0,
    not from F.
    """
    from .complexes import artinian_reduction, j_generators
    from .ring import substitute

    R = artinian_reduction(F)
    if bound is None:
        bound = default_bound(R)
    gens = [substitute(g, {0: 0}) for g in j_generators(S)]
    dims = quotient_dims([g for g in gens if g], R.ctx, bound, field)
    rep = check_complex(R)
    ex = check_exactness_graded(R, bound=bound, expected_h0=lambda b: dims[b], field=field)
    out = VerificationReport("reduction", rep.passed and ex.passed, rep.details + ex.details, bound)
    return out

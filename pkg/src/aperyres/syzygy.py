"""Degree-by-degree linear algebra over a positively graded polynomial ring.

Every graded component of a free module over k[y, x_i : i live] is finite
dimensional, so ideal membership and kernels can be computed one internal
degree at a time. This is how a minimal resolution of I_S over the smaller
ring is obtained for the tensor-product comparison; it is slow but exact and
only meant for small examples.
"""
from __future__ import annotations

from .complexes import FreeComplex
from .linalg import Echelon, nullspace
from .ring import GradedMatrix, Polynomial, RingContext, is_homogeneous, monomials_of_degree


def _vector(column, mono):
    """Coordinates of mono * column in the basis {(row, monomial)}."""
    vec = {}
    for r, poly in column.items():
        for nu, c in poly.items():
            key = (r, tuple(a + b for a, b in zip(mono, nu)))
            vec[key] = vec.get(key, 0) + c
    return {k: v for k, v in vec.items() if v}


def minimal_generators(polys, ctx: RingContext) -> list[Polynomial]:
    """Drop each generator that lies in the ideal of the kept ones of degree <= its own."""
    graded = sorted(((is_homogeneous(p, ctx), n, p) for n, p in enumerate(polys)), key=lambda t: (t[0], t[1]))
    kept = []
    for D, _, g in graded:
        ech = Echelon()
        for h_deg, h in kept:
            for mu in monomials_of_degree(ctx, D - h_deg):
                ech.add(_vector({0: h}, mu))
        if ech.add(_vector({0: g}, (0,) * ctx.nvars)):
            kept.append((D, g))
    return [g for _, g in kept]


def kernel_generators(columns, col_degrees, ctx: RingContext, bound: int):
    """Minimal homogeneous generators, up to internal degree ``bound``, of the
    kernel of the map whose c-th source generator (degree col_degrees[c]) goes
    to ``columns[c]`` (a dict row -> Polynomial)."""
    gens = []  # (degree, dict col -> Polynomial)
    if not col_degrees:
        return gens
    for b in range(min(col_degrees), bound + 1):
        comp = [(c, mu) for c, dc in enumerate(col_degrees) if dc <= b for mu in monomials_of_degree(ctx, b - dc)]
        if not comp:
            continue
        images = [_vector(columns[c], mu) for c, mu in comp]
        kernel = nullspace(images, len(comp))
        if not kernel:
            continue
        span = Echelon()
        for dg, g in gens:
            for mu in monomials_of_degree(ctx, b - dg):
                span.add(_vector(g, mu))
        for vec in kernel:
            coords = {comp[j]: v for j, v in vec.items()}
            if span.add(coords):
                g = {}
                for (c, mu), v in coords.items():
                    g[c] = g.get(c, Polynomial.zero()) + Polynomial.monomial(mu, v)
                gens.append((b, {c: p for c, p in g.items() if p}))
    return gens


def minimal_resolution(generators, ctx: RingContext, bound: int) -> FreeComplex:
    """Minimal graded free resolution of R/(generators), syzygies sought up to ``bound``."""
    gens = minimal_generators(generators, ctx)
    labels = [(0,)]
    degrees = [(0,)]
    cols = [{0: g} for g in gens]
    col_deg = tuple(is_homogeneous(g, ctx) for g in gens)
    maps = []
    while cols:
        maps.append(GradedMatrix(degrees[-1], col_deg, {(r, c): p for c, col in enumerate(cols) for r, p in col.items()}))
        labels.append(tuple(range(len(cols))))
        degrees.append(col_deg)
        syz = kernel_generators(cols, col_deg, ctx, bound)
        cols = [g for _, g in syz]
        col_deg = tuple(d for d, _ in syz)
    return FreeComplex(ctx, tuple(labels), tuple(degrees), tuple(maps), "minimal")

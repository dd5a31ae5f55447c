import random

import pytest

from aperyres.complexes import (
    artinian_reduction,
    build_apery_complex,
    koszul_complex,
    regrade,
    unit_complex,
)
from aperyres.errors import BoundTooSmall
from aperyres.linalg import parse_field
from aperyres.oracle import (
    all_normal_forms,
    check_artinian_reduction,
    check_complex,
    check_exactness_graded,
    check_generators,
    check_initial_ideal,
    euler_characteristic_check,
    ideals_equal,
    normal_form,
    quotient_dims,
)
from aperyres.ring import GradedMatrix, Polynomial, RingContext, degree, ring_context
from aperyres.semigroup import AperyTable, apery, from_generators

from conftest import brute_semigroup


def sg(*g):
    return from_generators(g)


def flip_one_sign(F, d):
    M = F.maps[d - 1]
    entries = dict(M.entries)
    k = sorted(entries)[0]
    entries[k] = -entries[k]
    maps = list(F.maps)
    maps[d - 1] = GradedMatrix(M.row_degrees, M.col_degrees, entries)
    return type(F)(F.ctx, F.labels, F.degrees, tuple(maps), F.kind), k


def test_check_complex_pass_and_mutation():
    F = build_apery_complex(sg(4, 9, 11, 14))
    assert check_complex(F).passed
    ctx = ring_context(apery(sg(4, 9, 11, 14)))
    x = lambda i, e=1: Polynomial.var(i, 4, e)
    assert check_complex(koszul_complex([x(1, 2) - x(0) * x(2), x(1) * x(3) - x(0, 5)], ctx)).passed
    bad, (r, c) = flip_one_sign(F, 2)
    rep = check_complex(bad)
    assert not rep.passed
    assert any(d["col"] == c or d["row"] == r for d in rep.details)
    assert all("map" in d for d in rep.details)


def test_normal_forms():
    t = apery(sg(4, 9, 11, 14))
    assert normal_form((0, 1, 0, 1), t) == (5, 0, 0, 0)
    assert normal_form((0, 2, 0, 0), t) == (1, 0, 1, 0)
    assert all_normal_forms((0, 1, 1, 1), t) == {(5, 0, 1, 0)}
    pick_last = lambda pairs: pairs[-1]
    assert normal_form((0, 1, 1, 1), t, pick_last) == (5, 0, 1, 0)


def test_normal_form_preserves_degree_and_lands_in_standard_set():
    rng = random.Random(7)
    for g in ((4, 9, 11, 14), (4, 13, 23), (6, 9, 20)):
        t = apery(sg(*g))
        ctx = ring_context(t)
        for _ in range(100):
            mono = tuple(rng.randint(0, 3) for _ in range(t.m))
            nf = normal_form(mono, t)
            assert degree(nf, ctx) == degree(mono, ctx)
            assert sum(nf[1:]) <= 1


def test_initial_ideal():
    assert check_initial_ideal(sg(4, 9, 11, 14), 40).passed
    rep = check_initial_ideal(sg(2, 3), 10)
    assert rep.passed
    corrupted = AperyTable.from_values((4, 9, 18, 11), check=False)
    assert not check_initial_ideal(sg(4, 9, 11, 14), 40, corrupted).passed


def test_generators():
    assert check_generators(sg(4, 9, 11, 14)).passed
    assert check_generators(sg(4, 13, 23)).passed
    t = apery(sg(4, 9, 11, 14))
    rep = check_generators(sg(4, 9, 11, 14), t.with_c(1, 3, t.cij(1, 3) + 1))
    assert not rep.passed
    assert rep.details[0]["problem"] == "inhomogeneous"


def test_exactness_examples():
    S = sg(4, 9, 11, 14)
    F = build_apery_complex(S)
    assert check_exactness_graded(F, S).bound == 56
    assert check_exactness_graded(F, S, 68).passed
    with pytest.raises(BoundTooSmall):
        check_exactness_graded(F, S, 40)
    T = sg(2, 3)
    assert check_exactness_graded(build_apery_complex(T), T).passed


def test_exactness_detects_mutation():
    S = sg(3, 4, 5)
    F = build_apery_complex(S)
    bad, _ = flip_one_sign(F, 2)
    rep = check_exactness_graded(bad, S)
    assert not rep.passed
    assert rep.details[0]["position"] == 1


def test_exactness_prime_field():
    S = sg(4, 13, 23)
    F = build_apery_complex(S)
    assert check_exactness_graded(F, S, field=parse_field("prime:2")).passed


def test_truncated_complex_is_not_exact():
    S = sg(3, 4, 5)
    F = build_apery_complex(S)
    short = type(F)(F.ctx, F.labels[:2], F.degrees[:2], F.maps[:1], F.kind)
    assert not check_exactness_graded(short, S).passed


def test_euler():
    S = sg(3, 4, 5)
    t = apery(S)
    assert (t.bij(1, 1), t.bij(2, 2), t.bij(1, 2)) == (1, 2, 3)
    assert euler_characteristic_check(build_apery_complex(S), S, 30).passed
    T = sg(2, 3)
    assert euler_characteristic_check(build_apery_complex(T), T, 12).passed
    assert not euler_characteristic_check(unit_complex(ring_context(apery(T))), T, 12).passed


def test_quotient_dims_of_toric_ideal_is_semigroup_indicator():
    from aperyres.complexes import j_generators

    S = sg(4, 13, 23)
    ok = brute_semigroup((4, 13, 23), 60)
    assert quotient_dims(j_generators(S), ring_context(apery(S)), 60) == [int(v) for v in ok]


def test_artinian_reduction_checks():
    S = sg(4, 9, 11, 14)
    F = build_apery_complex(S)
    assert check_artinian_reduction(F, S).passed
    R = artinian_reduction(F)
    G = regrade(R, RingContext(4, (1, 1, 1, 1), R.ctx.variables))
    h0 = {0: 1, 1: 3}
    assert check_exactness_graded(G, expected_h0=lambda b: h0.get(b, 0)).passed


def test_ideals_equal():
    ctx = RingContext(3, (3, 1, 1), (1, 2))
    x = lambda i, e=1: Polynomial.var(i, 3, e)
    assert ideals_equal([x(1, 2), x(1) * x(2)], [x(1) * x(2), x(1, 2)], ctx, 6)
    assert not ideals_equal([x(1, 2)], [x(1) * x(2)], ctx, 6)

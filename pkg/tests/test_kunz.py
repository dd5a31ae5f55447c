from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aperyres.errors import InvalidAperyVector, MultiplicityMismatch, NotInCone
from aperyres.kunz import (
    KunzPoint,
    face_signature,
    facet_pairs,
    in_cone,
    kunz_point,
    same_face,
    semigroup_from_point,
    signature_of,
    validate_apery_vector,
)
from aperyres.semigroup import apery, from_generators

from conftest import random_semigroup


def test_kunz_points():
    assert kunz_point(apery(from_generators([4, 9, 11, 14]))).z == (9, 14, 11)
    assert kunz_point(apery(from_generators([4, 13, 23]))).z == (13, 26, 23)
    assert kunz_point(apery(from_generators([2, 3]))).z == (3,)


def test_in_cone():
    assert in_cone(KunzPoint.of(4, (1, 0, 1)))
    assert in_cone(KunzPoint.of(4, (9, 14, 11)))
    assert not in_cone(KunzPoint.of(4, (0, 1, 0)))
    assert in_cone(KunzPoint.of(4, (Fraction(1, 2), 1, Fraction(1, 2))))


def test_face_signature():
    assert not face_signature(KunzPoint.of(4, (9, 14, 11))).tight
    assert face_signature(KunzPoint.of(4, (13, 26, 23))).tight == {(1, 1)}
    assert face_signature(KunzPoint.of(4, (1, 2, 3))).tight == {(1, 1), (1, 2)}
    assert str(face_signature(KunzPoint.of(4, (13, 26, 23)))) == "{(1,1)}"
    with pytest.raises(NotInCone):
        face_signature(KunzPoint.of(4, (0, 1, 0)))


def test_facets_of_c4():
    assert facet_pairs(4) == [(1, 1), (1, 2), (2, 3), (3, 3)]


def test_validate_and_rebuild():
    assert validate_apery_vector((9, 14, 11), 4)
    assert not validate_apery_vector((1, 0, 1), 4)
    assert validate_apery_vector((13, 26, 23), 4)
    assert semigroup_from_point((9, 14, 11), 4).minimal_generators == (4, 9, 11, 14)
    assert semigroup_from_point((13, 26, 23), 4).minimal_generators == (4, 13, 23)
    assert semigroup_from_point((3,), 2).minimal_generators == (2, 3)
    with pytest.raises(InvalidAperyVector):
        semigroup_from_point((1, 0, 1), 4)


def test_same_face():
    S, T, U = (from_generators(g) for g in ([4, 9, 11, 14], [4, 13, 23], [4, 17, 27]))
    assert not same_face(S, T)
    assert same_face(T, U)
    assert same_face(S, S)
    with pytest.raises(MultiplicityMismatch):
        same_face(S, from_generators([3, 4, 5]))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.randoms(use_true_random=False))
def test_signature_is_zero_b_and_round_trip(m, r):
    S = random_semigroup(m, r)
    t = apery(S)
    zero_b = {(i, j) for i in range(1, m) for j in range(i, m) if i + j != m and t.bij(i, j) == 0}
    assert signature_of(S).tight == zero_b
    assert semigroup_from_point(t.a[1:], m).witness == S.witness
    assert validate_apery_vector(t.a[1:], m)

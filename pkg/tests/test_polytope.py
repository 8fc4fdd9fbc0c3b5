"""Polytope classification, vertices, faces, and the segment predicate."""

from fractions import Fraction
from itertools import permutations

import pytest

from mirror_morse.polytope import (FaceDescriptor, FactorFace, ProductPolytope,
                                   segment_contains)

F = Fraction


def test_classify_frozen_examples():
    P2 = ProductPolytope([2])
    assert P2.classify((1, F(1, 2))).kind == "interior"
    loc = P2.classify((1, 1))
    assert loc.kind == "boundary"
    assert loc.face.faces[0].cap and not loc.face.faces[0].zeros

    P11 = ProductPolytope([1, 1])
    loc = P11.classify((0, 2))
    assert loc.kind == "boundary"
    assert loc.face.faces[0].zeros == frozenset({0})
    assert loc.face.faces[1].cap

    assert P2.classify((3, 0)).kind == "outside"
    assert P2.classify((F(-1, 7), 1)).kind == "outside"


def test_classify_dimension_mismatch():
    with pytest.raises(ValueError):
        ProductPolytope([2]).classify((1,))


def test_vertices():
    assert ProductPolytope([2]).vertices() == [
        (F(0), F(0)), (F(2), F(0)), (F(0), F(2))]
    assert ProductPolytope([1]).vertices() == [(F(0),), (F(2),)]
    assert len(ProductPolytope([1, 1]).vertices()) == 4


@pytest.mark.parametrize("dims", [[1], [2], [3], [1, 1], [1, 2]])
def test_every_vertex_is_boundary(dims):
    P = ProductPolytope(dims)
    for v in P.vertices():
        assert P.classify(v).kind == "boundary"


def test_classify_invariant_under_factor_permutation():
    P3 = ProductPolytope([3])
    pts = [(F(1, 3), F(1, 2), F(0)), (F(1), F(1), F(0)), (F(1, 5), F(1, 7), F(1, 11))]
    for pt in pts:
        kinds = {P3.classify(perm).kind for perm in permutations(pt)}
        assert len(kinds) == 1


def test_segment_contains_frozen_examples():
    assert segment_contains((0,), (2,), (1,))
    assert not segment_contains((0, 0), (2, 0), (0, 2))
    # lambda = 2/3 from the first coordinate, consistent everywhere
    assert segment_contains((1,), (2,), (F(4, 3),))
    assert not segment_contains((1,), (2,), (F(5, 2),))


def test_segment_endpoints_always_contained():
    pts = [((0, 0), (2, 0)), ((F(1, 3), F(1, 7)), (F(2, 5), F(1, 2))),
           ((1,), (1,))]
    for a, b in pts:
        assert segment_contains(a, b, a)
        assert segment_contains(a, b, b)


def test_segment_dimension_mismatch():
    with pytest.raises(ValueError):
        segment_contains((0,), (1, 1), (0,))


def test_face_descriptor_rejects_infeasible():
    with pytest.raises(ValueError):
        FactorFace(frozenset({0}), True).validate(1)
    FactorFace(frozenset({0}), True).validate(2)  # feasible edge of a triangle
    with pytest.raises(ValueError):
        FactorFace(frozenset({0, 1}), True).validate(2)


def test_face_descriptor_active():
    fd = FaceDescriptor((FactorFace(frozenset(), False),))
    assert not fd.active
    fd = FaceDescriptor((FactorFace(frozenset(), False), FactorFace(frozenset(), True)))
    assert fd.active


def test_descriptor_parse_roundtrip():
    for text, dims in [("P2", (2,)), ("P1xP2", (1, 2)), ("P1XP1xP3", (1, 1, 3))]:
        P = ProductPolytope.from_descriptor(text)
        assert P.dims == dims
    assert ProductPolytope.from_descriptor("P1x P2").dims == (1, 2)
    for bad in ["", "P0", "Q2", "P2x", "xP1", "P1,P2"]:
        with pytest.raises(ValueError):
            ProductPolytope.from_descriptor(bad)


def test_split_join():
    P = ProductPolytope([1, 2])
    x = (F(1), F(1, 2), F(1, 3))
    assert P.join(P.split(x)) == x
    with pytest.raises(ValueError):
        P.split((F(1),))

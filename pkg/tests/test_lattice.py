from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import lattice_member, minor_gcd, newton_contains_2d
from seminorm.lattice import (
    DimensionError,
    carrier_face,
    cone_description,
    dominates,
    enumerate_faces,
    facet_description,
    hermite_basis,
    lattice_contains,
    minimal_elements,
    nullspace,
    primitive,
    rank,
)

RUNNING = [(6, 0), (2, 4), (0, 6)]

small_vec2 = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
gen2 = st.tuples(st.integers(0, 8), st.integers(0, 8)).filter(any)


def test_minimal_elements_drops_dominated_points():
    assert minimal_elements([(3, 3), (2, 4), (6, 0), (2, 5), (6, 0)]) == [(2, 4), (3, 3), (6, 0)]


def test_primitive_and_rank():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(1, 2), (0, 1), (5, 5)]) == 2


def test_nullspace_is_orthogonal_and_primitive():
    (a,) = nullspace([(2, 4, 0), (0, 0, 3)], 3)
    assert a in ((2, -1, 0), (-2, 1, 0))


def test_hermite_basis_of_mixed_generators():
    # (6,0),(2,4),(0,6),(1,-1) span <(1,-1),(0,6)>, index 6
    L = hermite_basis([(6, 0), (2, 4), (0, 6), (1, -1)])
    assert L.basis == ((1, 5), (0, 6))
    assert (1, -1) in L and (0, 1) not in L


def test_hermite_basis_edge_cases():
    assert hermite_basis([(0, 0)]).basis == ()
    assert hermite_basis([], dim=3).rank == 0
    assert hermite_basis([(3, 0), (0, 1)]).basis == ((3, 0), (0, 1))
    with pytest.raises(ValueError):
        hermite_basis([])
    with pytest.raises(DimensionError):
        hermite_basis([(1, 2), (1, 2, 3)])


def test_lattice_contains_checks_dimension():
    L = hermite_basis([(2, 0), (0, 2)])
    assert lattice_contains(L, (4, -2))
    assert not lattice_contains(L, (1, 0))
    with pytest.raises(DimensionError):
        lattice_contains(L, (1, 0, 0))


@given(st.lists(small_vec2, min_size=1, max_size=4), small_vec2)
def test_hermite_membership_matches_minor_oracle(points, v):
    assert (v in hermite_basis(points)) == lattice_member(points, v, 2)


@given(st.lists(small_vec2, min_size=2, max_size=4))
def test_hermite_index_matches_minor_gcd(points):
    L = hermite_basis(points)
    g = minor_gcd(points, 2)
    if g:
        assert L.rank == 2 and L.basis[0][0] * L.basis[1][1] == g
    else:
        assert L.rank < 2


@given(st.lists(small_vec2, min_size=1, max_size=4))
def test_hermite_basis_is_canonical(points):
    shuffled = list(reversed(points)) + [tuple(a + b for a, b in zip(points[0], points[-1]))]
    assert hermite_basis(points) == hermite_basis(shuffled)


def test_running_example_facets_and_faces():
    P = facet_description(RUNNING)
    assert sorted(P.facets) == sorted([((1, 0), 0), ((0, 1), 0), ((1, 1), 6)])
    faces = enumerate_faces(P)
    assert len(faces) == 6
    bounded = [F for F in faces if F.is_bounded]
    assert [sorted(F.points) for F in bounded if F.dim == 1] == [[(0, 6), (2, 4), (6, 0)]]


def test_carrier_face_of_points():
    P = facet_description(RUNNING)
    assert carrier_face(P, (1, 1)) is None
    edge = carrier_face(P, (3, 3))
    assert edge.dim == 1 and edge.is_bounded
    assert carrier_face(P, (5, 5)).dim == 2
    vertex = carrier_face(P, (0, 6))
    assert vertex.dim == 0 and vertex.points == ((0, 6),)


def test_face_sample_lies_in_relative_interior():
    P = facet_description([(1, 7), (8, 2), (3, 3)])
    for F in enumerate_faces(P):
        tight = {i for i, (a, b) in enumerate(P.facets) if sum(x * y for x, y in zip(a, F.sample)) == b}
        assert frozenset(tight) == F.active


@given(st.lists(gen2, min_size=1, max_size=5), st.tuples(st.integers(0, 10), st.integers(0, 10)))
def test_newton_membership_matches_segment_oracle(gens, gamma):
    assert facet_description(gens).contains(gamma) == newton_contains_2d(gens, gamma)


def test_three_dimensional_polyhedron():
    P = facet_description([(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert ((1, 1, 1), 2) in P.facets
    assert P.contains((1, 1, 0)) and not P.contains((1, 0, 0))
    assert carrier_face(P, (1, 1, 0)).dim == 1


def test_cone_description_of_umbrella_and_degenerate_cones():
    C = cone_description([(1, 0), (1, 1), (0, 2)], 2)
    assert C.contains((0, 1)) and not C.contains((-1, 1))
    line = cone_description([(2, 4)], 2)
    assert line.contains((1, 2)) and not line.contains((1, 1)) and not line.contains((-1, -2))
    assert cone_description([], 2).contains((0, 0))
    assert not cone_description([], 2).contains((1, 0))


def test_dominates():
    assert dominates((3, 4), (3, 2)) and not dominates((3, 1), (0, 2))


def test_face_points_use_fractions_in_sample():
    F = enumerate_faces(facet_description(RUNNING))[0]
    assert all(isinstance(x, Fraction) for x in F.sample)

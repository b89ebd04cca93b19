from fractions import Fraction

import pytest

from conftest import sigma_of
from exceptions import Unclassifiable
from polytope import (
    HYPERSIMPLEX, K9, OCTAHEDRON, PRISM6, TETRAHEDRON, VERTEX, LatticePolytope, affine_dim, classify,
    edges, f_vector, face_lattice, facets, hypersimplex, interior_facets, nonsimple_vertex_count, polytope_of,
    relative_interior_contains, toric_singular_points, type_keys, weight_vector,
)


def test_weight_vector():
    assert weight_vector((1, 3), 5) == (1, 0, 1, 0, 0)


def test_hypersimplex_face_counts():
    delta = hypersimplex(5, 2)
    assert len(delta.vertices) == 10
    assert delta.dim == 4
    assert f_vector(delta) == (10, 30, 30, 10)
    assert classify(delta) == HYPERSIMPLEX
    lattice = face_lattice(delta)
    assert len(lattice[4]) == 1
    assert all(len(edge) == 2 for edge in lattice[1])
    assert affine_dim(delta) == 4


def test_hypersimplex_facets_are_octahedra_and_tetrahedra():
    kinds = sorted(classify(f) for f in facets(hypersimplex(5, 2)))
    assert kinds == [OCTAHEDRON] * 5 + [TETRAHEDRON] * 5


def test_hypersimplex_rejects_bad_parameters():
    with pytest.raises(ValueError):
        hypersimplex(3, 3)


def test_duplicate_vertices_collapse():
    p = LatticePolytope(((1, 1, 0), (1, 1, 0), (0, 1, 1)))
    assert p.vertices == ((0, 1, 1), (1, 1, 0))
    assert p.dim == 1


def test_octahedron_and_prism(octahedron_5):
    octahedron = polytope_of(octahedron_5)
    assert f_vector(octahedron) == (6, 12, 8)
    assert classify(octahedron) == OCTAHEDRON

    prism = polytope_of(sigma_of("13", "14", "15", "23", "24", "25"))
    assert f_vector(prism) == (6, 9, 5)
    assert len(edges(prism)) == 9
    assert classify(prism) == PRISM6


def test_nonsimple_vertices(octahedron_5):
    assert nonsimple_vertex_count(hypersimplex(5, 2)) == 10
    assert toric_singular_points(octahedron_5) == 6
    assert toric_singular_points(sigma_of("13", "14", "15", "23", "24", "25")) == 0


def test_unclassifiable_hull():
    with pytest.raises(Unclassifiable):
        classify(hypersimplex(6, 1))


def test_relative_interior(octahedron_5):
    delta = hypersimplex(5, 2)
    assert relative_interior_contains(delta, [Fraction(2, 5)] * 5)
    assert not relative_interior_contains(delta, (1, 1, 0, 0, 0))
    assert not relative_interior_contains(delta, [Fraction(1, 5)] * 5)
    half = Fraction(1, 2)
    assert relative_interior_contains(polytope_of(octahedron_5), (half, half, half, half, 0))
    assert not relative_interior_contains(polytope_of(octahedron_5), [Fraction(2, 5)] * 5)


def test_relative_interior_of_a_vertex():
    vertex = polytope_of(sigma_of("12"))
    assert relative_interior_contains(vertex, (1, 1, 0, 0, 0))
    assert not relative_interior_contains(vertex, (1, 0, 1, 0, 0))


def test_interior_facets(k9_45):
    assert interior_facets(hypersimplex(5, 2)) == []
    k9 = polytope_of(k9_45)
    assert classify(k9) == K9
    (cut,) = interior_facets(k9)
    assert classify(cut) == PRISM6
    assert all(v[3] + v[4] == 1 for v in cut.vertices)


def test_faces_of_the_hypersimplex_are_admissible():
    from strata import admissible_set

    lattice = face_lattice(hypersimplex(5, 2))
    for faces in lattice.values():
        for face in faces:
            pairs = [tuple(i + 1 for i, x in enumerate(v) if x) for v in face]
            sigma = admissible_set(5, pairs)
            assert set(polytope_of(sigma).vertices) == set(face)


def test_classification_is_keyed_on_the_f_vector():
    assert type_keys()[(6, 12, 8)] == OCTAHEDRON
    assert type_keys()[(6, 9, 5)] == PRISM6
    assert type_keys()[(10, 30, 30, 10)] == HYPERSIMPLEX
    assert type_keys()[()] == VERTEX
    assert len(set(type_keys().values())) == 12

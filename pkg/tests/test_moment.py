import random
from fractions import Fraction

import pytest

from exceptions import OutsideOpenHypersimplex, Unsupported
from moment import (
    check_regular_values, dmu_rank, is_regular_point, is_regular_value, moment,
    prism_strata, random_interior_value, singular_value_witnesses,
)
from plucker import PlaneMatrix, plucker_coordinates, random_planes
from polytope import PRISM6
from strata import stratum_kind

F = Fraction


@pytest.fixture
def generic_plane():
    return plucker_coordinates(PlaneMatrix.from_rows([[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]))


def test_moment_of_a_generic_plane(generic_plane):
    x = moment(generic_plane)
    assert x == (F(5, 8), F(1, 6), F(7, 24), F(7, 24), F(5, 8))
    assert sum(x) == 2
    assert dmu_rank(generic_plane) == 4
    assert is_regular_point(generic_plane)


def test_moment_is_invariant_under_scaling(generic_plane):
    from exact import GaussianRational

    assert moment(generic_plane.scaled(GaussianRational(1, 3))) == moment(generic_plane)


@pytest.mark.parametrize("images", [[2, 1, 3, 4, 5], [2, 3, 4, 5, 1], [5, 3, 1, 4, 2]])
def test_moment_is_equivariant_under_permutations(images):
    rows = [[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]
    permuted = [None] * 5
    for k, image in enumerate(images):
        permuted[image - 1] = rows[k]
    x = moment(plucker_coordinates(PlaneMatrix.from_rows(rows)))
    y = moment(plucker_coordinates(PlaneMatrix.from_rows(permuted)))
    assert all(y[image - 1] == x[k] for k, image in enumerate(images))


def test_degenerate_plane_is_not_regular():
    p = plucker_coordinates(PlaneMatrix.from_rows([[1, 0], [0, 1], [1, 1], [2, 2], [0, 0]]))
    assert dmu_rank(p) == 3
    assert not is_regular_point(p)
    assert moment(p)[4] == 0


def test_barycenter_is_a_regular_value():
    barycenter = [F(2, 5)] * 5
    assert is_regular_value(barycenter)
    assert singular_value_witnesses(barycenter) == []


def test_point_on_a_prism_is_singular():
    x = (F(1, 2), F(1, 2), F(1, 3), F(1, 3), F(1, 3))
    assert not is_regular_value(x)
    assert singular_value_witnesses(x)


@pytest.mark.parametrize("x", [
    (1, 1, 0, 0, 0),
    (F(1, 2),) * 4 + (F(1, 4),),
    (F(1, 2), F(1, 2), F(1, 2), F(1, 2), 0),
])
def test_values_outside_the_open_hypersimplex(x):
    with pytest.raises(OutsideOpenHypersimplex):
        is_regular_value(x)


def test_regular_values_need_n_5():
    with pytest.raises(Unsupported):
        is_regular_value([F(1, 2)] * 4, n=4)


def test_prism_strata():
    prisms = prism_strata()
    assert len(prisms) == 10
    assert all(stratum_kind(s)[0] == PRISM6 for s in prisms)


def test_random_values_lie_in_the_open_hypersimplex():
    rng = random.Random(5)
    for k in range(10):
        x = random_interior_value(rng, on_prism=k % 2 == 1)
        assert sum(x) == 2
        assert all(0 < v < 1 for v in x)
        if k % 2 == 1:
            assert not is_regular_value(x)


def test_check_regular_values_finds_no_disagreement():
    assert check_regular_values(7, 20) == []


def test_sampling_is_reproducible_from_the_seed():
    first = [random_interior_value(random.Random(5)) for _ in range(2)]
    assert first[0] == first[1]
    assert list(random_planes(11, 5, 5)) == list(random_planes(11, 5, 5))

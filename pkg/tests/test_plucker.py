import random

import pytest

from exact import GaussianRational
from exceptions import NotMainStratum, ParseError, RankDeficient
from plucker import (
    PlaneMatrix, PluckerVector, all_pairs, chart_coordinates, parse_matrix, parse_pair,
    plane_from_chart, plucker_coordinates, plucker_from_json, random_plane, random_planes,
    support, verify_relations,
)


@pytest.mark.parametrize("key", ["12", "1,2", [2, 1], (1, 2), " 21 "])
def test_parse_pair_accepts_common_forms(key):
    assert parse_pair(key) == (1, 2)


@pytest.mark.parametrize("key", ["11", "123", "a2", [0, 1]])
def test_parse_pair_rejects_garbage(key):
    with pytest.raises(ParseError):
        parse_pair(key)


def test_plucker_coordinates_of_a_simple_plane():
    m = PlaneMatrix.from_rows([[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]])
    p = plucker_coordinates(m)
    assert p[(1, 2)] == 1
    assert p[(3, 4)] == 1
    assert p[(2, 3)] == -1
    assert p.minor(3, 2) == 1
    assert len(p.coords) == 10
    assert verify_relations(p)


def test_rank_deficient_matrices_are_rejected():
    with pytest.raises(RankDeficient):
        PlaneMatrix.from_rows([[1, 2], [2, 4], [0, 0]])
    with pytest.raises(RankDeficient):
        PluckerVector(4, {"12": 0})


def test_zero_coordinates_are_dropped():
    p = PluckerVector(4, {"12": 1, "34": 0, "13": "0+1i"})
    assert set(p.coords) == {(1, 2), (1, 3)}
    assert p[(3, 4)] == 0


def test_projective_equality():
    m = PlaneMatrix.from_rows([[1, 0], [0, 1], [2, 3], [1, "0+1i"]])
    p = plucker_coordinates(m)
    assert p.same_point(p.scaled(GaussianRational(2, -5)))
    q = plucker_coordinates(PlaneMatrix.from_rows([[1, 0], [0, 1], [2, 4], [1, "0+1i"]]))
    assert not p.same_point(q)


def test_json_round_trip_keeps_the_point():
    m = PlaneMatrix.from_rows([[1, 0], [0, 1], ["1/2", "1+1i"], [3, -1]])
    p = plucker_coordinates(m)
    assert plucker_from_json(p.to_json()) == p
    with pytest.raises(ParseError):
        plucker_from_json({"n": 4})


def test_support_of_a_degenerate_plane():
    # rows 3 and 4 are multiples of each other, row 5 is zero
    m = PlaneMatrix.from_rows([[1, 0], [0, 1], [1, 1], [2, 2], [0, 0]])
    sigma = support(plucker_coordinates(m))
    assert (3, 4) not in sigma
    assert (1, 5) not in sigma
    assert sigma.sorted_pairs() == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]


def test_chart_coordinates_invert_plane_from_chart():
    z = [1, 1, 1, 1, 2, 3]
    plane = plane_from_chart(5, (1, 2), z)
    assert plane.rows[2] == (1, 1)
    assert chart_coordinates(plucker_coordinates(plane), (1, 2)) == tuple(z)


def test_chart_coordinates_in_another_chart():
    plane = plane_from_chart(5, (2, 4), [1, 2, 3, 5, 7, 11])
    p = plucker_coordinates(plane)
    assert chart_coordinates(p, (2, 4)) == (1, 2, 3, 5, 7, 11)


def test_chart_coordinates_outside_the_chart():
    m = PlaneMatrix.from_rows([[1, 0], [2, 0], [0, 1], [1, 1], [1, 2]])
    with pytest.raises(NotMainStratum):
        chart_coordinates(plucker_coordinates(m), (1, 2))


def test_random_planes_are_seeded_and_valid():
    first = list(random_planes(11, 20, 5))
    second = list(random_planes(11, 20, 5))
    assert first == second
    for m in first:
        assert verify_relations(plucker_coordinates(m))


def test_random_plane_hits_lower_strata():
    rng = random.Random(3)
    sizes = {len(support(plucker_coordinates(random_plane(rng, 5)))) for _ in range(60)}
    assert 10 in sizes
    assert min(sizes) < 10


def test_parse_matrix():
    m = parse_matrix({"rows": [["1", "0"], ["0", "1"], ["1/2", "0+1i"]]})
    assert m.n == 3
    assert m.rows[2][1] == GaussianRational(0, 1)
    with pytest.raises(ParseError):
        parse_matrix([])
    with pytest.raises(ParseError):
        parse_matrix([["1", "2", "3"], ["0", "1", "0"]])

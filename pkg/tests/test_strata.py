from collections import Counter

import pytest
from sympy import bell

from conftest import everything_but, sigma_of
from exceptions import NotAdmissible, OutOfRange, Unsupported
from plucker import plucker_coordinates, support
from polytope import K8, K9, OCTAHEDRON, PRISM6
from strata import (
    AdmissibleSet, admissible_set, configuration, defect, enumerate_admissible_sets,
    is_admissible, param_dim, polytope_dim, random_point, representative, stabilizer_dim,
    stratum_kind, stratum_label, stratum_record,
)


def expected_count(n):
    """Sum over zero sets Z of (number of partitions of the rest into >= 2 blocks)."""
    from math import comb

    return sum(comb(n, z) * (bell(n - z) - 1) for z in range(n - 1))


@pytest.mark.parametrize("n, total", [(3, 7), (4, 36), (5, 171)])
def test_enumeration_counts(n, total):
    sets = enumerate_admissible_sets(n)
    assert len(sets) == total == expected_count(n)
    assert len(set(sets)) == total


def test_enumeration_is_sorted_and_admissible():
    sets = enumerate_admissible_sets(4)
    assert sets == sorted(sets, key=lambda s: s.sorted_pairs())
    assert all(is_admissible(4, s.pairs) for s in sets)


def test_enumeration_bounds():
    with pytest.raises(OutOfRange):
        enumerate_admissible_sets(2)
    with pytest.raises(OutOfRange):
        enumerate_admissible_sets(8)


def test_configuration_of_k8():
    cfg = configuration(sigma_of("13", "14", "15", "23", "24", "25", "35", "45"))
    assert cfg.zeros == frozenset()
    assert sorted(map(sorted, cfg.blocks)) == [[1, 2], [3, 4], [5]]


def test_configuration_with_zero_rows():
    cfg = configuration(sigma_of("12", "13", "23"))
    assert cfg.zeros == frozenset({4, 5})
    assert len(cfg.blocks) == 3


@pytest.mark.parametrize("pairs", [
    ["12", "34"],
    ["12", "13", "24"],
    ["12", "23", "34"],
])
def test_non_admissible_sets(pairs):
    assert not is_admissible(5, pairs)
    with pytest.raises(NotAdmissible):
        admissible_set(5, pairs)


def test_pairs_out_of_range_are_not_admissible():
    with pytest.raises(NotAdmissible):
        configuration(AdmissibleSet(4, frozenset({(1, 5)})))


def test_representative_has_the_right_support():
    for sigma in enumerate_admissible_sets(5):
        assert support(plucker_coordinates(representative(sigma))) == sigma


def test_representative_of_a_single_pair():
    plane = representative(sigma_of("12"))
    assert plane.rows[0] == (1, 0)
    assert plane.rows[1] == (1, 1)
    assert all(row == (0, 0) for row in plane.rows[2:])


def test_random_point_lies_in_the_stratum(rng):
    sigma = sigma_of("13", "14", "15", "23", "24", "25", "35", "45")
    for _ in range(5):
        assert support(plucker_coordinates(random_point(sigma, rng))) == sigma


def test_dimensions(hypersimplex_stratum, k9_45, octahedron_5):
    assert polytope_dim(hypersimplex_stratum) == 4
    assert defect(hypersimplex_stratum) == 0
    assert stabilizer_dim(hypersimplex_stratum) == 1
    assert param_dim(hypersimplex_stratum) == 2
    assert param_dim(k9_45) == 1
    assert defect(octahedron_5) == 1
    prism = sigma_of("13", "14", "15", "23", "24", "25")
    assert polytope_dim(prism) == 3
    assert defect(prism) == 1
    assert param_dim(prism) == 0


def test_stratum_record(k9_45):
    record = stratum_record(k9_45)
    assert record.polytope_dim == 4
    assert record.defect == 0
    assert record.param_dim == 1
    assert support(plucker_coordinates(record.representative)) == k9_45


def test_stratum_kinds_and_labels(k9_45, octahedron_5):
    assert stratum_kind(k9_45) == (K9, (4, 5))
    assert stratum_label(k9_45) == "K9(45)"
    assert stratum_kind(octahedron_5) == (OCTAHEDRON, (5,))
    k8 = sigma_of("13", "14", "15", "23", "24", "25", "35", "45")
    assert stratum_kind(k8) == (K8, ((1, 2), (3, 4)))
    assert stratum_label(k8) == "K8(12,34)"
    prism = sigma_of("13", "14", "15", "23", "24", "25")
    assert stratum_kind(prism) == (PRISM6, (1, 2))
    assert stratum_label(sigma_of("12")).startswith("VERTEX")


def test_stratum_kinds_need_n_5():
    with pytest.raises(Unsupported):
        stratum_kind(admissible_set(4, ["12", "13", "23"]))


def test_census_of_kinds():
    census = Counter(stratum_kind(s)[0] for s in enumerate_admissible_sets(5))
    assert census[K9] == 10
    assert census[K8] == 15
    assert census[OCTAHEDRON] == 5
    assert census[PRISM6] == 10
    assert sum(census.values()) == 171


def test_everything_but_helper_builds_k9():
    assert len(everything_but("12")) == 9

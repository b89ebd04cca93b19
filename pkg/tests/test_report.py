import pytest

import config
import report
from exceptions import Unsupported, UsageError
from polytope import POLYTOPE_TYPES


def test_census_matches_the_expected_table():
    census = report.strata_report(5, summary=True).payload["census"]
    assert tuple(census[t] for t in POLYTOPE_TYPES) == report.EXPECTED_CENSUS
    assert sum(census.values()) == 171


def test_polytopes_report():
    entries = report.polytopes_report(5).payload["polytopes"]
    assert len(entries) == 13
    assert sum(e["orbit_size"] for e in entries) == 171
    k9 = next(e for e in entries if e["type"] == "K9")
    assert k9["nonsimple_vertices"] == 9
    assert k9["interior_facets"] == 1
    with pytest.raises(Unsupported):
        report.polytopes_report(6)


def test_resolve_plane_needs_one_source():
    with pytest.raises(UsageError):
        report.resolve_plane()
    with pytest.raises(UsageError):
        report.resolve_plane(matrix=[["1", "0"], ["0", "1"]], sigma=["12"])
    p = report.resolve_plane(sigma=["12", "13", "23"])
    assert len(p.coords) == 3


def test_parse_coefficients():
    assert report.parse_coefficients(" Z2 ") == "Z2"
    with pytest.raises(UsageError):
        report.parse_coefficients("q")


def test_homology_report_table():
    result = report.homology_report("V1")
    assert result.table.splitlines() == ["degree\tgroup", "0\tZ", "3\tZ", "5\tZ^5"]
    assert result.payload["euler_characteristic"] == -5


def test_acceptance_suite_passes(monkeypatch):
    monkeypatch.setattr(config, "ORACLE_PLANES", 60)
    monkeypatch.setattr(config, "REGULAR_VALUE_SAMPLES", 20)
    results = report.run_checks(5, seed=7, samples=10)
    assert [r.name for r in results] == [
        "stratum_census", "fundamental_strata", "moment_oracle", "singular_loci",
        "transition_calculus", "embedding_identities", "homology_stagewise",
        "homology_final", "homology_properties",
    ]
    failed = {r.name: r.detail for r in results if not r.passed}
    assert failed == {}


def test_acceptance_suite_covers_n_5_only():
    with pytest.raises(Unsupported):
        report.run_checks(4)

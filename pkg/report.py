# report.py
"""Payload builders shared by the command line and the HTTP API, and the acceptance suite."""
import random
import logging
from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import config
import complexes
from exact import render_rational
from exceptions import GorbitError, Unsupported, UsageError
from homology import (
    Z, Z2, HomologyGroup, HomologyProfile, assemble_pair, curated_complex, homology,
    orbit_space_homology, quotient_by_g42_homology, top_class_holds,
    universal_coefficient_consistent,
)
from models import (
    CheckResult, HomologyDegreeModel, HomologyProfileModel, MomentResponse,
    PluckerVectorModel, PolytopeModel, Report,
)
from moment import check_regular_values, dmu_rank, is_regular_point, is_regular_value, moment
from params import (
    embed_five, embed_universal, embedding_equations, euler_characteristic_universal,
    lift_to_blowup, parse_projective, plane_params, sample_main_triples,
    check_transitions, check_virtual_spaces, transition_12_13, triple, virtual_space,
)
from plucker import (
    PluckerVector, pair_key, parse_matrix, plucker_coordinates, plucker_from_json,
    random_planes, support, verify_relations,
)
from polytope import (
    EDGE, HYPERSIMPLEX, K7, K8, K9, OCTAHEDRON, POLYTOPE_TYPES, PRISM6, PYRAMID5,
    SQUARE, TETRAHEDRON, TRIANGLE, VERTEX, LatticePolytope, affine_dim, classify,
    f_vector, interior_facets, nonsimple_vertex_count, polytope_of,
    relative_interior_contains,
)
from strata import (
    AdmissibleSet, admissible_set, enumerate_admissible_sets, is_admissible,
    param_dim, representative, stratum_label, stratum_record,
)
from symmetry import fundamental_table, orbit_partition

COEFFICIENT_NAMES = {"z": Z, "z2": Z2}


def _tsv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(str(x) for x in row) for row in rows)
    return "\n".join(lines)


def _polytope_type(sigma: AdmissibleSet) -> Optional[str]:
    """Type tags cover the polytopes of G(n,2) for n <= 5."""
    return classify(polytope_of(sigma)) if sigma.n <= 5 else None


def polytope_model(p: LatticePolytope, tag: Optional[str] = None) -> PolytopeModel:
    return PolytopeModel(
        vertices=[list(v) for v in p.vertices], dim=p.dim, type=tag, f_vector=list(f_vector(p))
    )


def profile_model(profile: HomologyProfile) -> HomologyProfileModel:
    return HomologyProfileModel(
        space=profile.space,
        coefficients=profile.coefficients,
        degrees=[
            HomologyDegreeModel(degree=d, free_rank=g.free_rank, torsion=list(g.torsion))
            for d, g in profile.nontrivial().items()
        ],
        euler_characteristic=profile.euler_characteristic(),
    )


# --- Strata and polytopes ---
def stratum_json(sigma: AdmissibleSet) -> dict:
    record = stratum_record(sigma)
    return {
        "pairs": sigma.to_json(),
        "label": stratum_label(sigma) if sigma.n == 5 else None,
        "type": _polytope_type(sigma),
        "polytope_dim": record.polytope_dim,
        "defect": record.defect,
        "stabilizer_dim": record.stabilizer_dim,
        "param_dim": record.param_dim,
        "representative": record.representative.to_json(),
    }


def strata_report(n: int, summary: bool = False, command: str = "strata") -> Report:
    sets = enumerate_admissible_sets(n)
    payload: Dict = {"n": n, "total": len(sets)}
    if n <= 5:
        census = Counter(_polytope_type(s) for s in sets)
        payload["census"] = {t: census.get(t, 0) for t in POLYTOPE_TYPES}
    if summary:
        rows = list(payload.get("census", {}).items()) + [("total", len(sets))]
        table = _tsv(["type", "count"], rows)
    else:
        payload["strata"] = [stratum_json(s) for s in sets]
        table = _tsv(
            ["pairs", "type", "polytope_dim", "defect", "param_dim"],
            [
                (s["pairs"], s["type"], s["polytope_dim"], s["defect"], s["param_dim"])
                for s in payload["strata"]
            ],
        )
    return Report(command=command, payload=payload, table=table)


def polytopes_report(n: int, command: str = "polytopes") -> Report:
    """One row per S_n orbit of admissible polytopes."""
    if n > 5:
        raise Unsupported(f"Polytope types are tabulated for n <= 5, not {n}")
    entries = []
    for orbit in orbit_partition(n):
        sigma = orbit.generator
        p = polytope_of(sigma)
        tag = classify(p)
        entries.append({
            "generator": sigma.to_json(),
            "type": tag,
            "orbit_size": len(orbit.members),
            "stabilizer_order": orbit.stabilizer_order,
            "nonsimple_vertices": nonsimple_vertex_count(p),
            "interior_facets": len(interior_facets(p)),
            "polytope": polytope_model(p, tag).model_dump(),
        })
    table = _tsv(
        ["type", "generator", "orbit_size", "stabilizer_order", "f_vector", "nonsimple"],
        [
            (e["type"], e["generator"], e["orbit_size"], e["stabilizer_order"],
             e["polytope"]["f_vector"], e["nonsimple_vertices"])
            for e in entries
        ],
    )
    return Report(command=command, payload={"n": n, "polytopes": entries}, table=table)


def fundamental_report(n: int, command: str = "fundamental") -> Report:
    table = fundamental_table(n)
    payload = {
        "n": n,
        "orbit_count": table.orbit_count,
        "rows": [
            {"p": r.p, "m_p": r.m_p, "q_p": r.q_p, "generators": [g.to_json() for g in r.generators]}
            for r in table.rows
        ],
    }
    return Report(command=command, payload=payload, table=table.to_tsv())


# --- Moment map ---
def resolve_plane(plucker: Optional[dict] = None, matrix=None, sigma=None, n: int = 5) -> PluckerVector:
    """The plane named by exactly one of a Plücker vector, a matrix or an admissible set."""
    given = [x is not None for x in (plucker, matrix, sigma)]
    if sum(given) != 1:
        raise UsageError("Give exactly one of plucker, matrix or sigma")
    if plucker is not None:
        return plucker_from_json(plucker)
    if matrix is not None:
        return plucker_coordinates(parse_matrix(matrix))
    if not isinstance(sigma, AdmissibleSet):
        sigma = admissible_set(n, sigma)
    return plucker_coordinates(representative(sigma))


def moment_response(p: PluckerVector) -> MomentResponse:
    sigma = support(p)
    poly = polytope_of(sigma)
    mu = moment(p)
    data = p.to_json()
    return MomentResponse(
        plucker=PluckerVectorModel(n=data["n"], coords=data["coords"]),
        support=sigma.to_json(),
        moment=[render_rational(x) for x in mu],
        dmu_rank=dmu_rank(p),
        regular_point=is_regular_point(p),
        in_relative_interior=relative_interior_contains(poly, mu),
        polytope=polytope_model(poly, _polytope_type(sigma)),
    )


def moment_report(p: PluckerVector, command: str = "moment") -> Report:
    response = moment_response(p)
    table = _tsv(
        ["moment", "support", "dmu_rank", "regular"],
        [(" ".join(response.moment), " ".join(pair_key(q) for q in response.support),
          response.dmu_rank, response.regular_point)],
    )
    return Report(command=command, payload=response.model_dump(), table=table)


# --- Parameters ---
def transitions_report(seed: int, samples: int, command: str = "params check-transitions") -> Report:
    failures = check_transitions(seed, samples)
    example = triple((2, 1), (3, 1), (3, 2))
    payload = {
        "samples": samples,
        "failures": failures,
        "example": {"chart_12": example.to_json(), "chart_13": transition_12_13(example).to_json()},
    }
    table = _tsv(["check", "failures"], sorted(failures.items()))
    return Report(command=command, seed=seed, payload=payload, table=table)


def virtual_report(sigma: AdmissibleSet, chart, command: str = "params virtual") -> Report:
    family = virtual_space(sigma, chart)
    payload = {
        "sigma": sigma.to_json(),
        "label": stratum_label(sigma),
        "chart": pair_key(family.chart),
        "param_dim": param_dim(sigma),
        "pieces": family.describe(),
    }
    table = _tsv(["piece"], [(d,) for d in family.describe()])
    return Report(command=command, payload=payload, table=table)


def embed_report(
    matrix=None, coords: Optional[Sequence[str]] = None, direction: Optional[str] = None,
    command: str = "params embed",
) -> Report:
    """Embedding of a main-stratum plane (matrix) or of a point of the universal space (coords)."""
    if (matrix is None) == (coords is None):
        raise UsageError("Give exactly one of matrix or triple")
    if matrix is not None:
        p = plucker_coordinates(parse_matrix(matrix))
        point = plane_params(p).render()
        embedding = embed_five(p)
    else:
        if len(coords) != 3:
            raise UsageError(f"A triple has three points of CP^1, got {len(coords)}")
        t = triple(*(parse_projective(c) for c in coords))
        u = lift_to_blowup(t, parse_projective(direction) if direction else None)
        point = u.render()
        embedding = embed_universal(u)
    residues = [r.render() for r in embedding_equations(embedding.coords)]
    payload = {"point": point, "embedding": embedding.to_json(), "residues": residues}
    table = _tsv(["point", "e1..e5", "valid"], [(point, " ".join(embedding.to_json()["coords"]), embedding.valid)])
    return Report(command=command, payload=payload, table=table)


# --- Homology ---
def parse_coefficients(text: str) -> str:
    key = text.strip().lower()
    if key not in COEFFICIENT_NAMES:
        raise UsageError(f"Coefficients must be z or z2, got {text!r}")
    return COEFFICIENT_NAMES[key]


def space_homology(space: str, coefficients: str = Z) -> HomologyProfile:
    if space == "g42":
        return orbit_space_homology(4, coefficients)
    if space == "g52":
        return orbit_space_homology(5, coefficients)
    if space == "X" and coefficients == Z:
        return quotient_by_g42_homology()
    if space in ("V21", "V2", "V3"):
        return assemble_pair(complexes.pair_assembly(space), coefficients)
    if space in complexes.STAGES:
        return homology(curated_complex(space), coefficients)
    raise Unsupported(f"Unknown space {space!r}; expected one of {', '.join(complexes.STAGES)}")


def homology_report(space: str, coeff: str = "z", command: str = "homology") -> Report:
    profile = space_homology(space, parse_coefficients(coeff))
    model = profile_model(profile)
    table = _tsv(
        ["degree", "group"],
        [(d, g.render(profile.coefficients)) for d, g in profile.nontrivial().items()],
    )
    return Report(command=command, payload=model.model_dump(), table=table)


# --- Acceptance suite ---
EXPECTED_CENSUS = (1, 10, 15, 10, 5, 10, 30, 5, 15, 30, 30, 10)
EXPECTED_NONSIMPLE = {
    HYPERSIMPLEX: 10, K9: 9, K8: 4, K7: 1, OCTAHEDRON: 6, PYRAMID5: 1, PRISM6: 0, TETRAHEDRON: 0,
}
STABILIZER_ORDERS = {
    HYPERSIMPLEX: {120}, K9: {12}, K8: {8}, K7: {12}, OCTAHEDRON: {24}, PRISM6: {12},
    PYRAMID5: {4}, TETRAHEDRON: {24}, SQUARE: {8}, TRIANGLE: {6, 12}, EDGE: {4}, VERTEX: {12},
}


def _groups(**degrees) -> Dict[int, HomologyGroup]:
    """_groups(d0=1, d5=(0, (2,))) -> {0: Z, 5: Z2 torsion}."""
    found = {}
    for key, value in degrees.items():
        free, torsion = value if isinstance(value, tuple) else (value, ())
        found[int(key[1:])] = HomologyGroup(free, tuple(torsion))
    return found


EXPECTED_HOMOLOGY: Dict[Tuple[str, str], Dict[int, HomologyGroup]] = {
    ("V1", Z): _groups(d0=1, d3=1, d5=5),
    ("L1", Z): _groups(d0=1, d3=10),
    ("L2", Z): _groups(d0=1, d4=15),
    ("V21_rel_L2", Z): _groups(d0=1, d5=20, d6=10),
    ("V21", Z): _groups(d0=1, d4=1, d5=6, d6=10),
    ("V21", Z2): _groups(d0=1, d4=1, d5=6, d6=10),
    ("V2", Z): _groups(d0=1, d5=(6, (2,)), d6=5),
    ("V2", Z2): _groups(d0=1, d5=7, d6=6),
    ("V32", Z): _groups(d0=1, d6=6, d7=5, d8=1),
    ("g52", Z): _groups(d0=1, d5=(0, (2,)), d8=1),
    ("g52", Z2): _groups(d0=1, d5=1, d6=1, d8=1),
    ("g42", Z): _groups(d0=1, d5=1),
    ("X", Z): _groups(d0=1, d6=1, d8=1),
}
FINAL_SPACES = ("g52", "g42", "X")


def _matches(space: str, coefficients: str) -> Tuple[bool, str]:
    profile = space_homology(space, coefficients)
    ok = profile.nontrivial() == EXPECTED_HOMOLOGY[(space, coefficients)]
    return ok, f"H({space};{coefficients}) = {profile.render()}"


def _all_match(keys: Sequence[Tuple[str, str]]) -> Tuple[bool, str]:
    results = [_matches(space, c) for space, c in keys]
    return all(ok for ok, _ in results), "; ".join(detail for _, detail in results)


def _check_census() -> Tuple[bool, str]:
    sets = enumerate_admissible_sets(5)
    census = Counter(classify(polytope_of(s)) for s in sets)
    got = tuple(census.get(t, 0) for t in POLYTOPE_TYPES)
    return len(sets) == 171 and got == EXPECTED_CENSUS, f"{len(sets)} strata, census {got}"


def _check_fundamental() -> Tuple[bool, str]:
    table = fundamental_table(5)
    q = {r.p: r.q_p for r in table.rows}
    expected_q = {p: 2 if p in (3, 4, 6) else 1 for p in range(1, 11)}
    bad = [
        o.generator.render() for o in orbit_partition(5)
        if o.stabilizer_order not in STABILIZER_ORDERS[classify(polytope_of(o.generator))]
    ]
    ok = table.orbit_count == 13 and q == expected_q and not bad
    return ok, f"{table.orbit_count} orbits, q_p {q}, stabilizer mismatches {bad}"


def _check_oracle(seed: int) -> Tuple[bool, str]:
    failures = 0
    for m in random_planes(seed, config.ORACLE_PLANES, 5):
        p = plucker_coordinates(m)
        sigma = support(p)
        poly = polytope_of(sigma)
        ok = (
            is_admissible(5, sigma.pairs)
            and verify_relations(p)
            and relative_interior_contains(poly, moment(p))
            and dmu_rank(p) == affine_dim(poly)
        )
        failures += not ok
    return failures == 0, f"{failures} failures over {config.ORACLE_PLANES} planes"


def _check_singular(seed: int) -> Tuple[bool, str]:
    examples: Dict[str, AdmissibleSet] = {}
    for sigma in enumerate_admissible_sets(5):
        examples.setdefault(classify(polytope_of(sigma)), sigma)
    got = {t: nonsimple_vertex_count(polytope_of(examples[t])) for t in EXPECTED_NONSIMPLE}
    disagreements = check_regular_values(seed, config.REGULAR_VALUE_SAMPLES)
    barycenter = is_regular_value([Fraction(2, 5)] * 5)
    on_prism = is_regular_value([Fraction(1, 2), Fraction(1, 2)] + [Fraction(1, 3)] * 3)
    ok = got == EXPECTED_NONSIMPLE and not disagreements and barycenter and not on_prism
    return ok, f"nonsimple {got}, {len(disagreements)} regular-value disagreements"


def _check_transitions(seed: int, samples: int, virtual: Dict[str, int]) -> Tuple[bool, str]:
    counts = check_transitions(seed, samples)
    example = transition_12_13(triple((2, 1), (3, 1), (3, 2))) == triple((2, 1), (3, 2), (3, 4))
    ok = not any(counts.values()) and not virtual["equivariance"] and not virtual["projection"] and example
    return ok, f"transitions {counts}, virtual {virtual}"


def _check_embedding(seed: int, samples: int, virtual: Dict[str, int]) -> Tuple[bool, str]:
    rng = random.Random(seed)
    bad = sum(1 for t in sample_main_triples(rng, samples) if not embed_five(t).valid)
    chi = euler_characteristic_universal()
    ok = bad == 0 and not virtual["embedding"] and chi == 7
    return ok, f"{bad} main-stratum failures, {virtual['embedding']} family failures, chi = {chi}"


def _check_properties() -> Tuple[bool, str]:
    built = [curated_complex(stage) for stage in complexes.STAGES]
    spaces = ["V1", "L1", "L2", "V21", "V2", "V3", "X", "g42"]
    inconsistent = [
        s for s in spaces
        if not universal_coefficient_consistent(
            homology(curated_complex(s), Z), homology(curated_complex(s), Z2)
        )
    ]
    top = top_class_holds(4) and top_class_holds(5)
    ok = not inconsistent and top
    return ok, f"{len(built)} complexes with ∂² = 0, UCT failures {inconsistent}, top class {top}"


def run_checks(n: int = 5, seed: int = config.SEED, samples: int = config.SAMPLES) -> List[CheckResult]:
    """The acceptance suite for G(5,2); every check is independent of the others' outcome."""
    if n != 5:
        raise Unsupported(f"The acceptance suite covers n = 5, not {n}")
    virtual: Dict[str, int] = {}

    def virtual_counts() -> Dict[str, int]:
        if not virtual:
            virtual.update(check_virtual_spaces(seed))
        return virtual

    checks: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
        ("stratum_census", _check_census),
        ("fundamental_strata", _check_fundamental),
        ("moment_oracle", lambda: _check_oracle(seed)),
        ("singular_loci", lambda: _check_singular(seed)),
        ("transition_calculus", lambda: _check_transitions(seed, samples, virtual_counts())),
        ("embedding_identities", lambda: _check_embedding(seed, samples, virtual_counts())),
        ("homology_stagewise", lambda: _all_match(
            [key for key in EXPECTED_HOMOLOGY if key[0] not in FINAL_SPACES]
        )),
        ("homology_final", lambda: _all_match(
            [key for key in EXPECTED_HOMOLOGY if key[0] in FINAL_SPACES]
        )),
        ("homology_properties", _check_properties),
    ]
    results = []
    for name, check in checks:
        try:
            passed, detail = check()
        except GorbitError as e:
            logging.exception(f"Check {name} raised")
            passed, detail = False, f"{type(e).__name__}: {e}"
        if not passed:
            logging.warning(f"Check {name} failed: {detail}")
        results.append(CheckResult(name=name, passed=passed, detail=detail))
    logging.info(f"Acceptance suite: {sum(r.passed for r in results)}/{len(results)} checks passed")
    return results


def report_all(n: int = 5, seed: int = config.SEED, samples: int = config.SAMPLES,
               command: str = "report-all") -> Report:
    results = run_checks(n, seed, samples)
    payload = {
        "n": n,
        "samples": samples,
        "passed": all(r.passed for r in results),
        "checks": [r.model_dump() for r in results],
    }
    table = _tsv(["check", "passed", "detail"], [(r.name, r.passed, r.detail) for r in results])
    return Report(command=command, seed=seed, payload=payload, table=table)

# complexes.py
"""
Curated cell inventories for the filtration V1 ⊂ V2 ⊂ V3 = G(5,2)/T^5.

The boundary lists below are known modulo 2. Integral signs are lifted so that
every boundary is a cycle, and the extra top cells are chosen by a small search
that makes the connecting maps unimodular.
"""
import logging
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from exact import invariant_factors, kernel_coordinates, smith_decomposition
from exceptions import InternalAssertion, Unsupported
from homology import ChainComplex, PairAssembly, quotient_complex
from plucker import all_pairs, pair_key

BASEPOINT = "pt"
PAIRS = [pair_key(p) for p in all_pairs(5)]

# --- Fixture data ---
# f-cells of V21 relative to L2: ∂f = g(first) - g(second)
F_ENDPOINTS: Dict[str, Tuple[Tuple[str, str], Tuple[str, str]]] = {
    "f12_1": (("12", "34"), ("12", "45")),
    "f12_2": (("12", "45"), ("12", "35")),
    "f13_1": (("13", "24"), ("13", "45")),
    "f13_2": (("13", "45"), ("13", "25")),
    "f14_1": (("14", "23"), ("14", "35")),
    "f14_2": (("14", "35"), ("14", "25")),
    "f15_1": (("15", "23"), ("15", "34")),
    "f15_2": (("15", "34"), ("15", "24")),
    "f23_1": (("15", "23"), ("23", "45")),
    "f23_2": (("23", "45"), ("14", "23")),
    "f24_1": (("15", "24"), ("24", "35")),
    "f24_2": (("24", "35"), ("13", "24")),
    "f25_1": (("14", "25"), ("25", "34")),
    "f25_2": (("25", "34"), ("13", "25")),
    "f34_1": (("15", "34"), ("12", "34")),
    "f34_2": (("12", "34"), ("25", "34")),
    "f35_1": (("14", "35"), ("12", "35")),
    "f35_2": (("12", "35"), ("24", "35")),
    "f45_1": (("23", "45"), ("12", "45")),
    "f45_2": (("12", "45"), ("13", "45")),
}

# 6-cells of V3/V2 attached along f-cycles
P_SUPPORTS: Dict[str, Tuple[str, ...]] = {
    "p11": ("f14_1", "f23_1", "f23_2", "f15_1", "f34_1", "f35_1", "f12_1", "f12_2"),
    "p12": ("f14_2", "f25_1", "f34_2", "f35_1", "f12_1", "f12_2"),
    "p22": ("f34_2", "f35_2", "f12_1", "f12_2", "f13_1", "f13_2", "f24_2", "f25_2"),
    "p21": ("f15_2", "f35_2", "f34_1", "f12_1", "f12_2", "f24_1"),
}

# 7-cells of V3/V2 attached along e-cycles
M_SUPPORTS: Dict[str, Tuple[str, ...]] = {
    "m11": ("e15", "e35", "e23", "e12"),
    "m21": ("e35", "e12", "e25", "e13"),
    "m12": ("e14", "e34", "e23", "e12"),
    "m22": ("e12", "e13", "e24", "e34"),
}

KNOWN_C1 = ("f45_1", "f12_1", "f15_1", "f23_1", "f34_1")
KNOWN_C2 = ("f45_2", "f12_1", "f13_2", "f25_2", "f34_2")
KNOWN_C_DELTA = ("e45", "e25", "e12", "e14")
MAX_PATH_LENGTH = 8


# --- Cell names ---
def k8_pairs() -> List[Tuple[str, str]]:
    """The fifteen unordered pairs of disjoint pairs of {1..5}."""
    found = []
    for a, b in combinations(PAIRS, 2):
        if not set(a) & set(b):
            found.append((a, b))
    return found


def k8_cell(ij: str, kl: str) -> str:
    ij, kl = sorted((ij, kl))
    return f"K8({ij},{kl})"


def k7_cell(ij: str) -> str:
    return f"K7({ij})"


def g_chain(ij: str, kl: str) -> Dict[str, int]:
    """The 4-cycle g(ij,kl) = K8(ij,kl) - K7(ij) - K7(kl) of L2."""
    return {k8_cell(ij, kl): 1, k7_cell(ij): -1, k7_cell(kl): -1}


def _add(target: Dict[str, int], chain: Mapping[str, int], k: int = 1):
    for cell, c in chain.items():
        target[cell] = target.get(cell, 0) + k * c


def f_boundary(f: str) -> Dict[str, int]:
    first, second = F_ENDPOINTS[f]
    chain: Dict[str, int] = {}
    _add(chain, g_chain(*first))
    _add(chain, g_chain(*second), -1)
    return {cell: c for cell, c in chain.items() if c}


def e_boundary(e: str) -> Dict[str, int]:
    i, j = e[1], e[2]
    return {f"S{i}": 1, f"S{j}": 1}


def _g_graph() -> Dict[str, Dict[str, int]]:
    """f-cells as signed edges between their two g endpoints."""
    return {
        f: {k8_cell(*first): 1, k8_cell(*second): -1}
        for f, (first, second) in F_ENDPOINTS.items()
    }


# --- Sign lifting ---
def lift_signs(support: Sequence[str], boundaries: Mapping[str, Mapping[str, int]]) -> Dict[str, int]:
    """
    Signs ±1 on a mod-2 cycle making it an integral cycle. The first cell keeps
    sign +1 and sign vectors are tried in lexicographic order, + before -.
    """
    support = list(support)
    for tail in product((1, -1), repeat=len(support) - 1):
        signs = (1,) + tail
        total: Dict[str, int] = {}
        for cell, s in zip(support, signs):
            _add(total, boundaries[cell], s)
        if not any(total.values()):
            return dict(zip(support, signs))
    raise InternalAssertion(f"No integral sign lift for {list(support)}")


def _vector(chain: Mapping[str, int], cells: Sequence[str]) -> List[int]:
    return [chain.get(c, 0) for c in cells]


def _unimodular(chains: Sequence[Mapping[str, int]], cells: Sequence[str],
                boundaries: Mapping[str, Mapping[str, int]], faces: Sequence[str]) -> bool:
    """Whether the chains form a Z-basis of the integer cycles spanned by `cells`."""
    matrix = [[boundaries[c].get(face, 0) for c in cells] for face in faces]
    decomposition = smith_decomposition(matrix, len(cells))
    k = len(cells) - decomposition.rank
    if len(chains) != k:
        return False
    columns = [kernel_coordinates(decomposition, _vector(z, cells)) for z in chains]
    factors = invariant_factors([[col[r] for col in columns] for r in range(k)], k)
    return len(factors) == k and all(f == 1 for f in factors)


# --- Connecting cycles ---
def _simple_paths(start: str, goal: str, edges: Mapping[str, Tuple[str, str]],
                  banned: Sequence[str]) -> List[Tuple[str, ...]]:
    adjacency: Dict[str, List[Tuple[str, str]]] = {}
    for name, (a, b) in sorted(edges.items()):
        if name in banned:
            continue
        adjacency.setdefault(a, []).append((name, b))
        adjacency.setdefault(b, []).append((name, a))
    paths = []

    def walk(vertex, visited, used):
        if vertex == goal:
            paths.append(tuple(used))
            return
        if len(used) == MAX_PATH_LENGTH:
            return
        for name, other in adjacency.get(vertex, []):
            if other not in visited:
                walk(other, visited | {other}, used + [name])

    walk(start, {start}, [])
    return sorted(paths, key=lambda p: (len(p), sorted(p)))


def _f_cycle_candidates(f45: str) -> List[Tuple[str, ...]]:
    endpoints = {f: (k8_cell(*a), k8_cell(*b)) for f, (a, b) in F_ENDPOINTS.items()}
    start, goal = endpoints[f45]
    paths = _simple_paths(goal, start, endpoints, ("f45_1", "f45_2"))
    return [(f45,) + path for path in paths]


def _e_cycle_candidates() -> List[Tuple[str, ...]]:
    """The six 4-cycles of K5 through the edge 45."""
    candidates = []
    for a, b in permutations((1, 2, 3), 2):
        walk = [4, 5, a, b, 4]
        candidates.append(tuple(f"e{''.join(map(str, sorted(walk[k:k + 2])))}" for k in range(4)))
    return candidates


@lru_cache(maxsize=None)
def connecting_cycles() -> Dict[str, Dict[str, int]]:
    """
    Signed attaching cycles of the 6-cells c1, c2 (through f45_1 and f45_2) and
    of the 7-cell mD (through e45), chosen so that together with the p- and
    m-cells they form bases of the integral cycles.
    """
    graph = _g_graph()
    g_cells = sorted({g for faces in graph.values() for g in faces})
    f_cells = list(F_ENDPOINTS)
    fixed = [lift_signs(P_SUPPORTS[p], graph) for p in P_SUPPORTS]
    found: Dict[str, Dict[str, int]] = {}

    c1_options = [KNOWN_C1] + _f_cycle_candidates("f45_1")
    c2_options = [KNOWN_C2] + _f_cycle_candidates("f45_2")
    for c1, c2 in product(c1_options, c2_options):
        chains = fixed + [lift_signs(c1, graph), lift_signs(c2, graph)]
        if _unimodular(chains, f_cells, graph, g_cells):
            found["c1"], found["c2"] = chains[-2], chains[-1]
            break
    else:
        raise InternalAssertion("No pair of f45-cycles completes a basis of the f-cycles")

    e_cells = [f"e{p}" for p in PAIRS]
    boundaries = {e: e_boundary(e) for e in e_cells}
    s_cells = [f"S{i}" for i in range(1, 6)]
    fixed = [lift_signs(M_SUPPORTS[m], boundaries) for m in M_SUPPORTS]
    for candidate in [KNOWN_C_DELTA] + _e_cycle_candidates():
        chains = fixed + [lift_signs(candidate, boundaries)]
        if _unimodular(chains, e_cells, boundaries, s_cells):
            found["mD"] = chains[-1]
            break
    else:
        raise InternalAssertion("No 4-cycle through e45 completes a basis of the e-cycles")
    logging.info(f"Connecting cycles: c1={sorted(found['c1'])}, c2={sorted(found['c2'])}, mD={sorted(found['mD'])}")
    return found


# --- Minimal models ---
def sphere(d: int, name: Optional[str] = None) -> ChainComplex:
    return ChainComplex(name or f"S{d}", {0: [BASEPOINT], d: [f"s{d}"]})


def cp2() -> ChainComplex:
    return ChainComplex("CP2", {0: [BASEPOINT], 2: ["c2"], 4: ["c4"]})


def cp1xcp1() -> ChainComplex:
    return ChainComplex("CP1xCP1", {0: [BASEPOINT], 2: ["a2", "b2"], 4: ["ab4"]})


def g42() -> ChainComplex:
    """
    G(4,2)/T^4, which is homeomorphic to S^5: one 0-cell and one 5-cell.

    This is a fixture, not a computation. The homeomorphism is a known result,
    so orbit_space_homology(4) reports the homology of this sphere.
    """
    return sphere(5, "g42")


def v1() -> ChainComplex:
    """V1 with V1/S^3 a wedge of five 5-spheres, one per octahedron O_i."""
    return ChainComplex("V1", {0: [BASEPOINT], 3: ["s3"], 5: [f"S{i}" for i in range(1, 6)]})


def l1() -> ChainComplex:
    """A wedge of ten 3-spheres, one per prism P_ij."""
    return ChainComplex("L1", {0: [BASEPOINT], 3: [f"P{p}" for p in PAIRS]})


def l2() -> ChainComplex:
    cells = {
        0: [BASEPOINT],
        3: [f"P{p}" for p in PAIRS],
        4: [k7_cell(p) for p in PAIRS] + [k8_cell(a, b) for a, b in k8_pairs()],
    }
    boundaries = {k7_cell(p): {f"P{p}": 1} for p in PAIRS}
    for a, b in k8_pairs():
        boundaries[k8_cell(a, b)] = {f"P{a}": 1, f"P{b}": 1}
    return ChainComplex("L2", cells, boundaries)


def v21_rel_l2() -> ChainComplex:
    """V21/L2: twenty 5-spheres and ten 6-spheres."""
    return ChainComplex(
        "V21_rel_L2",
        {0: [BASEPOINT], 5: list(F_ENDPOINTS), 6: [f"e{p}" for p in PAIRS]},
    )


def v32() -> ChainComplex:
    """V3/V2 with homology Z, Z^6 at 6, Z^5 at 7 and Z at 8."""
    return ChainComplex(
        "V32",
        {
            0: [BASEPOINT],
            6: list(P_SUPPORTS) + ["c1", "c2"],
            7: list(M_SUPPORTS) + ["mD"],
            8: ["top"],
        },
    )


# --- Pairs ---
def pair_assembly(name: str) -> PairAssembly:
    """The three steps of the filtration as (subcomplex, quotient, attaching data)."""
    if name == "V21":
        attaching = {f: f_boundary(f) for f in F_ENDPOINTS}
        return PairAssembly("V21", l2(), v21_rel_l2(), attaching)
    if name == "V2":
        attaching = {k8_cell(a, b): {"s3": 1} for a, b in k8_pairs()}
        attaching.update({f"e{p}": e_boundary(f"e{p}") for p in PAIRS})
        return PairAssembly("V2", v1(), pair_assembly("V21").total(), attaching)
    if name == "V3":
        graph = _g_graph()
        e_boundaries = {f"e{p}": e_boundary(f"e{p}") for p in PAIRS}
        attaching = {p: lift_signs(P_SUPPORTS[p], graph) for p in P_SUPPORTS}
        attaching.update({m: lift_signs(M_SUPPORTS[m], e_boundaries) for m in M_SUPPORTS})
        attaching.update(connecting_cycles())
        return PairAssembly("V3", pair_assembly("V2").total(), v32(), attaching)
    raise Unsupported(f"Unknown pair {name!r}; expected V21, V2 or V3")


_BUILDERS = {
    "V1": v1,
    "L1": l1,
    "L2": l2,
    "V21_rel_L2": v21_rel_l2,
    "V32": v32,
    "S3": lambda: sphere(3, "S3"),
    "CP2": cp2,
    "CP1xCP1": cp1xcp1,
    "g42": g42,
}
STAGES = tuple(_BUILDERS) + ("V21", "V2", "V3", "g52", "X")


def curated_complex(stage: str) -> ChainComplex:
    if stage in _BUILDERS:
        return _BUILDERS[stage]()
    if stage in ("V21", "V2", "V3"):
        return pair_assembly(stage).total()
    if stage == "g52":
        return pair_assembly("V3").total()
    if stage == "X":
        total = pair_assembly("V3").total()
        return quotient_complex(total, ["S5"], BASEPOINT)
    raise Unsupported(f"Unknown complex {stage!r}; expected one of {', '.join(STAGES)}")

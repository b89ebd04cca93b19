# strata.py
"""
Admissible sets of G(n,2) and the strata they index.

For 2-planes a support pattern is the same thing as a configuration (Z, π):
rows in Z vanish and the remaining rows are grouped into collinear blocks; a
pair is in the support exactly when its rows lie in different blocks.
"""
import random
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Tuple

from sympy.utilities.iterables import multiset_partitions

import config
from exact import GaussianRational
from exceptions import InternalAssertion, NotAdmissible, OutOfRange, RankDeficient, Unsupported
from plucker import Pair, PlaneMatrix, pair_key, parse_pair, plucker_coordinates, random_gaussian, support
from polytope import (
    EDGE, HYPERSIMPLEX, K7, K8, K9, OCTAHEDRON, PRISM6, PYRAMID5,
    SQUARE, TETRAHEDRON, TRIANGLE, VERTEX, affine_dim, polytope_of,
)


@dataclass(frozen=True)
class AdmissibleSet:
    """A set of sorted pairs of {1..n}; admissibility is checked by `configuration`."""
    n: int
    pairs: FrozenSet[Pair]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(tuple(sorted(p)) for p in self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return tuple(sorted(pair)) in self.pairs

    def sorted_pairs(self) -> List[Pair]:
        return sorted(self.pairs)

    def to_json(self) -> List[List[int]]:
        return [list(p) for p in self.sorted_pairs()]

    def render(self) -> str:
        return "{" + ",".join(pair_key(p) for p in self.sorted_pairs()) + "}"


def admissible_set(n: int, pairs: Iterable) -> AdmissibleSet:
    """Builds and validates; raises NotAdmissible."""
    sigma = AdmissibleSet(n, frozenset(parse_pair(p) for p in pairs))
    configuration(sigma)
    return sigma


@dataclass(frozen=True)
class Configuration:
    zeros: FrozenSet[int]
    blocks: Tuple[FrozenSet[int], ...]


def induced_pairs(blocks: Iterable[Iterable[int]]) -> FrozenSet[Pair]:
    blocks = [sorted(b) for b in blocks]
    pairs = set()
    for a, b in combinations(blocks, 2):
        pairs.update(tuple(sorted((i, j))) for i in a for j in b)
    return frozenset(pairs)


def configuration(sigma: AdmissibleSet) -> Configuration:
    """
    The canonical (Z, π) witness. Blocks are the connected components of the
    complement graph on the rows that occur in some pair.
    """
    if any(p[0] < 1 or p[1] > sigma.n or p[0] == p[1] for p in sigma.pairs):
        raise NotAdmissible(f"Pairs outside 1..{sigma.n}: {sigma.render()}")
    used = sorted({i for p in sigma.pairs for i in p})
    zeros = frozenset(range(1, sigma.n + 1)) - set(used)
    blocks: List[FrozenSet[int]] = []
    seen = set()
    for start in used:
        if start in seen:
            continue
        component, frontier = {start}, [start]
        while frontier:
            i = frontier.pop()
            for j in used:
                if j not in component and tuple(sorted((i, j))) not in sigma.pairs:
                    component.add(j)
                    frontier.append(j)
        seen |= component
        blocks.append(frozenset(component))
    if len(blocks) < 2 or induced_pairs(blocks) != sigma.pairs:
        raise NotAdmissible(f"{sigma.render()} is not the support of a plane")
    return Configuration(zeros, tuple(sorted(blocks, key=min)))


def is_admissible(n: int, pairs: Iterable) -> bool:
    try:
        admissible_set(n, pairs)
    except NotAdmissible:
        return False
    return True


def enumerate_admissible_sets(n: int) -> List[AdmissibleSet]:
    """Every admissible set once: a zero set Z and a partition of the rest into >= 2 blocks."""
    if not config.MIN_N <= n <= config.MAX_N:
        raise OutOfRange(f"n must be between {config.MIN_N} and {config.MAX_N}, got {n}")
    found = []
    rows = range(1, n + 1)
    for z in range(n - 1):
        for zeros in combinations(rows, z):
            rest = [i for i in rows if i not in zeros]
            for partition in multiset_partitions(rest):
                if len(partition) >= 2:
                    found.append(AdmissibleSet(n, induced_pairs(partition)))
    found.sort(key=lambda s: s.sorted_pairs())
    logging.info(f"Enumerated {len(found)} admissible sets for n={n}")
    return found


def representative(sigma: AdmissibleSet) -> PlaneMatrix:
    """Rows in Z are zero; block b (ordered by smallest row) has direction (1, b)."""
    cfg = configuration(sigma)
    rows = [(0, 0)] * sigma.n
    for slope, block in enumerate(cfg.blocks):
        for i in block:
            rows[i - 1] = (1, slope)
    plane = PlaneMatrix.from_rows(rows)
    if support(plucker_coordinates(plane)) != sigma:
        raise InternalAssertion(f"Representative of {sigma.render()} has the wrong support")
    return plane


def random_point(sigma: AdmissibleSet, rng: random.Random) -> PlaneMatrix:
    """A random plane of the stratum: random block directions, random nonzero row scalings."""
    cfg = configuration(sigma)
    while True:
        directions = [
            (random_gaussian(rng), random_gaussian(rng)) for _ in cfg.blocks
        ]
        rows = [(GaussianRational(), GaussianRational())] * sigma.n
        for (a, b), block in zip(directions, cfg.blocks):
            for i in block:
                scale = random_gaussian(rng, nonzero=True)
                rows[i - 1] = (scale * a, scale * b)
        try:
            plane = PlaneMatrix.from_rows(rows)
        except RankDeficient:
            continue
        if support(plucker_coordinates(plane)) == sigma:
            return plane


# --- Dimensions ---
def polytope_dim(sigma: AdmissibleSet) -> int:
    return affine_dim(polytope_of(sigma))


def stabilizer_dim(sigma: AdmissibleSet) -> int:
    """Complex dimension of the common stabilizer of W_sigma in the torus."""
    configuration(sigma)
    return sigma.n - polytope_dim(sigma)


def defect(sigma: AdmissibleSet) -> int:
    configuration(sigma)
    return sigma.n - 1 - polytope_dim(sigma)


def param_dim(sigma: AdmissibleSet) -> int:
    """Complex dimension of the space of parameters F_sigma."""
    return max(len(configuration(sigma).blocks) - 3, 0)


# --- Names for n = 5 ---
def stratum_kind(sigma: AdmissibleSet) -> Tuple[str, Tuple]:
    """Polytope type read off the configuration, with the indices naming the stratum."""
    if sigma.n != 5:
        raise Unsupported("Stratum names are only defined for n = 5")
    cfg = configuration(sigma)
    sizes = sorted(len(b) for b in cfg.blocks)
    multi = [tuple(sorted(b)) for b in cfg.blocks if len(b) > 1]
    singles = tuple(sorted(min(b) for b in cfg.blocks if len(b) == 1))
    zeros = tuple(sorted(cfg.zeros))
    if not zeros:
        if sizes == [1, 1, 1, 1, 1]:
            return HYPERSIMPLEX, ()
        if sizes == [1, 1, 1, 2]:
            return K9, multi[0]
        if sizes == [1, 2, 2]:
            return K8, tuple(sorted(multi))
        if sizes == [1, 1, 3]:
            return K7, singles
        if sizes == [2, 3]:
            return PRISM6, next(b for b in multi if len(b) == 2)
        return TETRAHEDRON, singles
    if len(zeros) == 1:
        if sizes == [1, 1, 1, 1]:
            return OCTAHEDRON, zeros
        if sizes == [1, 1, 2]:
            return PYRAMID5, zeros + multi[0]
        if sizes == [2, 2]:
            return SQUARE, zeros
        return TRIANGLE, zeros + singles
    if len(zeros) == 2:
        return (TRIANGLE if sizes == [1, 1, 1] else EDGE), zeros
    return VERTEX, tuple(sorted(sigma.pairs))[0]


def stratum_label(sigma: AdmissibleSet) -> str:
    tag, indices = stratum_kind(sigma)
    if tag == HYPERSIMPLEX:
        return tag
    if tag == K8:
        return f"{tag}({pair_key(indices[0])},{pair_key(indices[1])})"
    if tag in (K9, K7, PRISM6, OCTAHEDRON, TETRAHEDRON):
        return f"{tag}({''.join(map(str, indices))})"
    return f"{tag}{sigma.render()}"


@dataclass(frozen=True)
class StratumRecord:
    sigma: AdmissibleSet
    representative: PlaneMatrix
    stabilizer_dim: int
    defect: int
    polytope_dim: int
    param_dim: int


def stratum_record(sigma: AdmissibleSet) -> StratumRecord:
    dim = polytope_dim(sigma)
    return StratumRecord(
        sigma=sigma,
        representative=representative(sigma),
        stabilizer_dim=sigma.n - dim,
        defect=sigma.n - 1 - dim,
        polytope_dim=dim,
        param_dim=param_dim(sigma),
    )

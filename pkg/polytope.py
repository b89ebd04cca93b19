# polytope.py
"""
Admissible lattice polytopes: hulls of the weight vectors Λ_ij.

Faces are found by exact double description: in affine-hull coordinates every
affinely independent d-subset of vertices spans a candidate hyperplane, which is
a facet when all vertices lie on one side of it. Lower faces are facets of facets.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from exact import rank_rational, rational_nullspace, solve_rational
from exceptions import Unclassifiable

Vertex = Tuple[int, ...]

HYPERSIMPLEX = "HYPERSIMPLEX"
K9 = "K9"
K8 = "K8"
K7 = "K7"
OCTAHEDRON = "OCTAHEDRON"
PRISM6 = "PRISM6"
PYRAMID5 = "PYRAMID5"
TETRAHEDRON = "TETRAHEDRON"
SQUARE = "SQUARE"
TRIANGLE = "TRIANGLE"
EDGE = "EDGE"
VERTEX = "VERTEX"

POLYTOPE_TYPES = (
    HYPERSIMPLEX, K9, K8, K7, OCTAHEDRON, PRISM6,
    PYRAMID5, TETRAHEDRON, SQUARE, TRIANGLE, EDGE, VERTEX,
)

# One reference hull per tag, as pairs of indices for n = 5; its f-vector is the classification key.
_REFERENCE_PAIRS = {
    HYPERSIMPLEX: "12 13 14 15 23 24 25 34 35 45",
    K9: "12 13 14 15 23 24 25 34 35",
    K8: "12 13 14 15 24 25 34 35",
    K7: "12 13 14 15 23 24 25",
    OCTAHEDRON: "12 13 14 23 24 34",
    PRISM6: "13 14 15 23 24 25",
    PYRAMID5: "12 13 14 23 24",
    TETRAHEDRON: "12 13 14 15",
    SQUARE: "13 14 23 24",
    TRIANGLE: "12 13 23",
    EDGE: "12 13",
    VERTEX: "12",
}


def weight_vector(pair: Tuple[int, ...], n: int) -> Vertex:
    """Λ_I: ones at the (1-based) positions of I."""
    return tuple(1 if i + 1 in pair else 0 for i in range(n))


@dataclass(frozen=True)
class Facet:
    """Inequality a.y <= b in affine-hull coordinates, tight exactly on `vertices`."""
    vertices: FrozenSet[Vertex]
    normal: Tuple[Fraction, ...]
    offset: Fraction


@dataclass(frozen=True)
class LatticePolytope:
    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(map(tuple, self.vertices)))))

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def _hull_basis(self) -> List[List[int]]:
        origin = self.vertices[0]
        basis: List[List[int]] = []
        for v in self.vertices[1:]:
            diff = [a - b for a, b in zip(v, origin)]
            if rank_rational(basis + [diff]) > len(basis):
                basis.append(diff)
        return basis

    @property
    def dim(self) -> int:
        return len(self._hull_basis)

    def hull_coordinates(self, x: Sequence) -> Tuple[Fraction, ...]:
        """Coordinates of x - v0 in the hull basis, or None when x is off the affine hull."""
        if not self._hull_basis:
            return () if tuple(x) == self.vertices[0] else None
        columns = [[row[k] for row in self._hull_basis] for k in range(self.n)]
        rhs = [Fraction(a) - b for a, b in zip(x, self.vertices[0])]
        solution = solve_rational(columns, rhs)
        return None if solution is None else tuple(solution)

    @cached_property
    def facets(self) -> Tuple[Facet, ...]:
        return _facets(self.vertices)

    @cached_property
    def faces(self) -> Dict[int, Tuple[FrozenSet[Vertex], ...]]:
        return _face_lattice(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices], "dim": self.dim}


@lru_cache(maxsize=None)
def _facets(vertices: Tuple[Vertex, ...]) -> Tuple[Facet, ...]:
    polytope = LatticePolytope(vertices)
    d = polytope.dim
    if d == 0:
        return ()
    coords = {v: polytope.hull_coordinates(v) for v in vertices}
    found: Dict[FrozenSet[Vertex], Facet] = {}
    for subset in combinations(vertices, d):
        base = coords[subset[0]]
        diffs = [[a - b for a, b in zip(coords[v], base)] for v in subset[1:]]
        if rank_rational(diffs) != d - 1:
            continue
        normal = rational_nullspace(diffs, ncols=d)[0]
        offset = sum(a * b for a, b in zip(normal, base))
        values = [sum(a * b for a, b in zip(normal, coords[v])) - offset for v in vertices]
        if all(x <= 0 for x in values):
            sign = 1
        elif all(x >= 0 for x in values):
            sign = -1
        else:
            continue
        tight = frozenset(v for v, x in zip(vertices, values) if x == 0)
        if tight not in found:
            found[tight] = Facet(tight, tuple(sign * a for a in normal), sign * offset)
    return tuple(found[k] for k in sorted(found, key=sorted))


@lru_cache(maxsize=None)
def _face_lattice(vertices: Tuple[Vertex, ...]) -> Dict[int, Tuple[FrozenSet[Vertex], ...]]:
    d = LatticePolytope(vertices).dim
    faces: Dict[int, set] = {k: set() for k in range(d + 1)}
    faces[d].add(frozenset(vertices))
    for facet in _facets(vertices):
        for k, sub in _face_lattice(tuple(sorted(facet.vertices))).items():
            faces[k].update(sub)
    return {k: tuple(sorted(v, key=sorted)) for k, v in faces.items()}


# --- Constructors ---
def hypersimplex(n: int, k: int) -> LatticePolytope:
    if not 1 <= k < n:
        raise ValueError(f"hypersimplex needs 1 <= k < n, got n={n}, k={k}")
    return LatticePolytope(tuple(weight_vector(c, n) for c in combinations(range(1, n + 1), k)))


def polytope_of(sigma) -> LatticePolytope:
    """Convex hull of Λ_ij over the pairs of an admissible set."""
    return LatticePolytope(tuple(weight_vector(p, sigma.n) for p in sorted(sigma.pairs)))


# --- Face data ---
def affine_dim(p: LatticePolytope) -> int:
    return p.dim


def face_lattice(p: LatticePolytope) -> Dict[int, Tuple[FrozenSet[Vertex], ...]]:
    return p.faces


def f_vector(p: LatticePolytope) -> Tuple[int, ...]:
    """Face counts in dimensions 0 .. dim-1."""
    return tuple(len(p.faces[k]) for k in range(p.dim))


def facets(p: LatticePolytope) -> List[LatticePolytope]:
    return [LatticePolytope(tuple(f.vertices)) for f in p.facets]


def edges(p: LatticePolytope) -> Tuple[FrozenSet[Vertex], ...]:
    return p.faces.get(1, ())


def vertex_degrees(p: LatticePolytope) -> Dict[Vertex, int]:
    degrees = {v: 0 for v in p.vertices}
    for edge in edges(p):
        for v in edge:
            degrees[v] += 1
    return degrees


def nonsimple_vertex_count(p: LatticePolytope) -> int:
    """Vertices with more incident edges than the dimension."""
    return sum(1 for d in vertex_degrees(p).values() if d > p.dim)


@lru_cache(maxsize=None)
def type_keys() -> Dict[Tuple[int, ...], str]:
    """f-vector -> tag, read off the reference hulls."""
    keys = {}
    for tag, pairs in _REFERENCE_PAIRS.items():
        hull = LatticePolytope(tuple(weight_vector(tuple(map(int, key)), 5) for key in pairs.split()))
        keys[f_vector(hull)] = tag
    if len(keys) != len(_REFERENCE_PAIRS):
        raise Unclassifiable("Two polytope types share an f-vector")
    return keys


def classify(p: LatticePolytope) -> str:
    tag = type_keys().get(f_vector(p))
    if tag is None:
        raise Unclassifiable(f"No polytope type for dim={p.dim}, f={f_vector(p)}")
    return tag


def relative_interior_contains(p: LatticePolytope, x: Sequence) -> bool:
    """x is a strictly positive convex combination of all vertices."""
    y = p.hull_coordinates(x)
    if y is None:
        return False
    if p.dim == 0:
        return True
    return all(sum(a * b for a, b in zip(f.normal, y)) < f.offset for f in p.facets)


def interior_facets(p: LatticePolytope) -> List[LatticePolytope]:
    """Facets of p that do not lie in a facet x_i = 0 or x_i = 1 of the hypersimplex."""
    inner = []
    for facet in facets(p):
        on_boundary = any(
            len({v[i] for v in facet.vertices}) == 1 for i in range(p.n)
        )
        if not on_boundary:
            inner.append(facet)
    return inner


def toric_singular_points(sigma) -> int:
    """Singular points of the orbit closure of a point of W_sigma."""
    count = nonsimple_vertex_count(polytope_of(sigma))
    logging.debug(f"{len(sigma.pairs)}-vertex polytope has {count} nonsimple vertices")
    return count

# homology.py
"""
Cellular homology over Z and Z/2, long exact sequences of pairs, and the
homology of the orbit spaces G(4,2)/T^4 and G(5,2)/T^5.

A chain complex is a graded list of named cells together with the boundary of
each cell as a sparse {face: coefficient} map. The matrix of ∂_d has the cells
of degree d-1 as rows and the cells of degree d as columns.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from exact import (
    invariant_factors, kernel_coordinates, nullspace_mod2, rank_mod2,
    rank_rational, smith_decomposition, integer_kernel_basis, transpose,
)
from exceptions import (
    AmbiguousExtension, BoundaryNotSquareZero, InexactSequence,
    InternalAssertion, Unsupported,
)

Z = "Z"
Z2 = "Z2"
COEFFICIENTS = (Z, Z2)


# --- Chain complexes ---
class ChainComplex:
    def __init__(
        self,
        name: str,
        cells: Mapping[int, Sequence[str]],
        boundaries: Mapping[str, Mapping[str, int]] = None,
    ):
        self.name = name
        self.cells: Dict[int, List[str]] = {d: list(c) for d, c in sorted(cells.items()) if c}
        self.degree_of: Dict[str, int] = {}
        for d, names in self.cells.items():
            for cell in names:
                if cell in self.degree_of:
                    raise InternalAssertion(f"Duplicate cell {cell} in {name}")
                self.degree_of[cell] = d
        self.boundaries: Dict[str, Dict[str, int]] = {}
        for cell, faces in (boundaries or {}).items():
            faces = {f: c for f, c in faces.items() if c}
            for face in faces:
                if self.degree_of.get(face) != self.degree_of[cell] - 1:
                    raise InternalAssertion(f"{face} is not a face of {cell} in {name}")
            if faces:
                self.boundaries[cell] = faces
        self._check_square_zero()

    @property
    def degrees(self) -> range:
        if not self.cells:
            return range(0)
        return range(min(self.cells), max(self.cells) + 1)

    def cells_in(self, d: int) -> List[str]:
        return self.cells.get(d, [])

    def boundary(self, cell: str) -> Dict[str, int]:
        return self.boundaries.get(cell, {})

    def boundary_matrix(self, d: int) -> List[List[int]]:
        rows = self.cells_in(d - 1)
        index = {cell: i for i, cell in enumerate(rows)}
        columns = self.cells_in(d)
        matrix = [[0] * len(columns) for _ in rows]
        for j, cell in enumerate(columns):
            for face, coefficient in self.boundary(cell).items():
                matrix[index[face]][j] = coefficient
        return matrix

    def chain_vector(self, d: int, chain: Mapping[str, int]) -> List[int]:
        return [chain.get(cell, 0) for cell in self.cells_in(d)]

    def _check_square_zero(self):
        for cell, faces in self.boundaries.items():
            total: Dict[str, int] = {}
            for face, c in faces.items():
                for sub, k in self.boundary(face).items():
                    total[sub] = total.get(sub, 0) + c * k
            if any(total.values()):
                raise BoundaryNotSquareZero(f"∂∂{cell} != 0 in {self.name}")

    def __repr__(self):
        counts = ", ".join(f"{d}:{len(c)}" for d, c in self.cells.items())
        return f"ChainComplex({self.name!r}, cells={{{counts}}})"


# --- Homology groups ---
@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def render(self, coefficients: str = Z) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.free_rank:
            parts.append(coefficients + (f"^{self.free_rank}" if self.free_rank > 1 else ""))
        parts.extend(f"Z{t}" for t in self.torsion)
        return "+".join(parts)


@dataclass
class HomologyProfile:
    space: str
    coefficients: str
    groups: Dict[int, HomologyGroup] = field(default_factory=dict)

    def group(self, d: int) -> HomologyGroup:
        return self.groups.get(d, HomologyGroup())

    def nontrivial(self) -> Dict[int, HomologyGroup]:
        return {d: g for d, g in sorted(self.groups.items()) if not g.is_zero}

    def same_groups(self, other: "HomologyProfile") -> bool:
        return self.coefficients == other.coefficients and self.nontrivial() == other.nontrivial()

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * g.free_rank for d, g in self.groups.items())

    def top_degree(self) -> int:
        return max(self.nontrivial(), default=0)

    def render(self) -> str:
        return ", ".join(f"H{d}={g.render(self.coefficients)}" for d, g in self.nontrivial().items())


def homology(c: ChainComplex, coefficients: str = Z) -> HomologyProfile:
    """H_d = ker ∂_d / im ∂_(d+1), with torsion from the invariant factors of ∂_(d+1)."""
    if coefficients not in COEFFICIENTS:
        raise Unsupported(f"Unknown coefficients {coefficients!r}")
    groups = {}
    for d in c.degrees:
        n_d = len(c.cells_in(d))
        lower = c.boundary_matrix(d)
        upper = c.boundary_matrix(d + 1)
        if coefficients == Z:
            below = len(invariant_factors(lower, n_d))
            above = invariant_factors(upper, len(c.cells_in(d + 1)))
            groups[d] = HomologyGroup(
                n_d - below - len(above), tuple(f for f in above if f > 1)
            )
        else:
            groups[d] = HomologyGroup(n_d - rank_mod2(lower) - rank_mod2(upper))
    profile = HomologyProfile(c.name, coefficients, groups)
    logging.debug(f"H({c.name}; {coefficients}) = {profile.render()}")
    return profile


def euler_characteristic(c: ChainComplex) -> int:
    """Alternating count of cells."""
    return sum((-1) ** d * len(names) for d, names in c.cells.items())


def universal_coefficient_consistent(integral: HomologyProfile, mod2: HomologyProfile) -> bool:
    """dim H_d(;Z2) = rank H_d + #(even torsion in H_d) + #(even torsion in H_(d-1))."""
    degrees = set(integral.groups) | set(mod2.groups)
    for d in degrees:
        even_here = sum(1 for t in integral.group(d).torsion if t % 2 == 0)
        even_below = sum(1 for t in integral.group(d - 1).torsion if t % 2 == 0)
        if mod2.group(d).free_rank != integral.group(d).free_rank + even_here + even_below:
            return False
    return True


# --- Constructions ---
def augmented(c: ChainComplex, unit: str = "ε") -> ChainComplex:
    cells = {d: list(names) for d, names in c.cells.items()}
    cells[-1] = [unit]
    boundaries = {cell: dict(faces) for cell, faces in c.boundaries.items()}
    for cell in c.cells_in(0):
        boundaries[cell] = {unit: 1}
    return ChainComplex(f"{c.name}+", cells, boundaries)


def join_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """
    Augmented tensor product shifted up by one; its homology is the reduced
    homology of the join.
    """
    left, right = augmented(a), augmented(b)
    name = lambda x, y: f"{x}*{y}"
    cells: Dict[int, List[str]] = {}
    boundaries: Dict[str, Dict[str, int]] = {}
    for p, xs in left.cells.items():
        for q, ys in right.cells.items():
            for x in xs:
                for y in ys:
                    cells.setdefault(p + q + 1, []).append(name(x, y))
                    faces: Dict[str, int] = {}
                    for fx, k in left.boundary(x).items():
                        faces[name(fx, y)] = faces.get(name(fx, y), 0) + k
                    sign = -1 if p % 2 else 1
                    for fy, k in right.boundary(y).items():
                        faces[name(x, fy)] = faces.get(name(x, fy), 0) + sign * k
                    boundaries[name(x, y)] = faces
    return ChainComplex(f"{a.name}*{b.name}", cells, boundaries)


def join_profile(a: ChainComplex, b: ChainComplex) -> HomologyProfile:
    """Unreduced integral homology of the join a * b."""
    reduced = homology(join_complex(a, b))
    groups = {d: g for d, g in reduced.groups.items() if d >= 0}
    base = groups.get(0, HomologyGroup())
    groups[0] = HomologyGroup(base.free_rank + 1, base.torsion)
    return HomologyProfile(f"{a.name}*{b.name}", Z, groups)


def quotient_complex(c: ChainComplex, collapsed: Iterable[str], basepoint: str = "pt") -> ChainComplex:
    """Collapses the subcomplex spanned by `collapsed` (and the base point) to the base point."""
    collapsed = set(collapsed)
    for cell in collapsed:
        if any(face not in collapsed and face != basepoint for face in c.boundary(cell)):
            raise InternalAssertion(f"{sorted(collapsed)} is not a subcomplex of {c.name}")
    cells = {d: [x for x in names if x not in collapsed] for d, names in c.cells.items()}
    boundaries = {
        cell: {f: k for f, k in faces.items() if f not in collapsed}
        for cell, faces in c.boundaries.items()
        if cell not in collapsed
    }
    return ChainComplex(f"{c.name}/{'+'.join(sorted(collapsed))}", cells, boundaries)


# --- Long exact sequence of a pair ---
@dataclass
class PairAssembly:
    """
    X built from a subcomplex `sub` and the quotient X/sub. `attaching` gives,
    for a cell of the quotient, the part of its boundary that lies in `sub`.
    """
    name: str
    sub: ChainComplex
    quotient: ChainComplex
    attaching: Dict[str, Dict[str, int]]
    basepoint: str = "pt"

    def relative(self) -> ChainComplex:
        """Chains of X modulo chains of sub: the quotient without its base point."""
        return _drop_cell(self.quotient, self.basepoint, f"{self.name}/{self.sub.name}")

    def total(self) -> ChainComplex:
        cells: Dict[int, List[str]] = {d: list(names) for d, names in self.sub.cells.items()}
        boundaries = {cell: dict(faces) for cell, faces in self.sub.boundaries.items()}
        relative = self.relative()
        for d, names in relative.cells.items():
            cells.setdefault(d, []).extend(names)
            for cell in names:
                faces = dict(relative.boundary(cell))
                for face, k in self.attaching.get(cell, {}).items():
                    faces[face] = faces.get(face, 0) + k
                boundaries[cell] = faces
        try:
            return ChainComplex(self.name, cells, boundaries)
        except BoundaryNotSquareZero as e:
            raise InexactSequence(f"Attaching data for {self.name} is not a chain map: {e}")


def _drop_cell(c: ChainComplex, cell: str, name: str) -> ChainComplex:
    cells = {d: [x for x in names if x != cell] for d, names in c.cells.items()}
    boundaries = {
        x: {f: k for f, k in faces.items() if f != cell}
        for x, faces in c.boundaries.items() if x != cell
    }
    return ChainComplex(name, cells, boundaries)


def _connecting_images(pair: PairAssembly, cycles: List[List[int]], d: int) -> List[List[int]]:
    """δ of relative d-cycles as chain vectors on the (d-1)-cells of sub."""
    relative_cells = pair.relative().cells_in(d)
    images = []
    for z in cycles:
        chain: Dict[str, int] = {}
        for cell, coefficient in zip(relative_cells, z):
            for face, k in pair.attaching.get(cell, {}).items():
                chain[face] = chain.get(face, 0) + coefficient * k
        images.append(pair.sub.chain_vector(d - 1, chain))
    return images


def _connecting_rank(pair: PairAssembly, d: int, coefficients: str) -> int:
    """Rank of δ: H_d(X, sub) -> H_(d-1)(sub)."""
    sub_boundaries = transpose(pair.sub.boundary_matrix(d), len(pair.sub.cells_in(d)))
    relative = pair.relative()
    n = len(relative.cells_in(d))
    if coefficients == Z:
        cycles = integer_kernel_basis(relative.boundary_matrix(d), n)
        images = _connecting_images(pair, cycles, d)
        return rank_rational(sub_boundaries + images) - rank_rational(sub_boundaries)
    cycles = nullspace_mod2(relative.boundary_matrix(d), n)
    images = _connecting_images(pair, cycles, d)
    return rank_mod2(sub_boundaries + images) - rank_mod2(sub_boundaries)


def _integral_cokernel(pair: PairAssembly, d: int) -> HomologyGroup:
    """coker(δ: H_(d+1)(X, sub) -> H_d(sub)), computed in cycle coordinates of sub."""
    n_d = len(pair.sub.cells_in(d))
    decomposition = smith_decomposition(pair.sub.boundary_matrix(d), n_d)
    k = n_d - decomposition.rank
    if k == 0:
        return HomologyGroup()
    boundaries = transpose(pair.sub.boundary_matrix(d + 1), len(pair.sub.cells_in(d + 1)))
    relative = pair.relative()
    cycles = integer_kernel_basis(relative.boundary_matrix(d + 1), len(relative.cells_in(d + 1)))
    generators = boundaries + _connecting_images(pair, cycles, d + 1)
    columns = [kernel_coordinates(decomposition, g) for g in generators]
    factors = invariant_factors(transpose(columns, k), len(columns)) if columns else ()
    return HomologyGroup(k - len(factors), tuple(f for f in factors if f > 1))


def assemble_pair(pair: PairAssembly, coefficients: str = Z) -> HomologyProfile:
    """
    Homology of X from the sequence
    0 -> coker δ_(d+1) -> H_d(X) -> ker δ_d -> 0,
    split when the relative group is free. The result is checked against a
    direct computation on the total complex.
    """
    total = pair.total()
    sub_h = homology(pair.sub, coefficients)
    rel_h = homology(pair.relative(), coefficients)
    degrees = range(
        min(min(pair.sub.degrees, default=0), min(rel_h.groups, default=0)),
        max(max(pair.sub.degrees, default=0), max(rel_h.groups, default=0)) + 1,
    )
    groups = {}
    for d in degrees:
        delta_d = _connecting_rank(pair, d, coefficients)
        delta_up = _connecting_rank(pair, d + 1, coefficients)
        relative = rel_h.group(d)
        if coefficients == Z2:
            dim = (sub_h.group(d).free_rank - delta_up) + (relative.free_rank - delta_d)
            groups[d] = HomologyGroup(dim)
            continue
        cokernel = _integral_cokernel(pair, d)
        if relative.torsion:
            if cokernel.is_zero and delta_d == 0:
                groups[d] = relative
                continue
            raise AmbiguousExtension(f"H_{d}({pair.name}) is an unresolved extension")
        groups[d] = HomologyGroup(
            cokernel.free_rank + relative.free_rank - delta_d, cokernel.torsion
        )
        logging.debug(f"{pair.name} degree {d}: coker {cokernel}, ker rank {relative.free_rank - delta_d}")
    profile = HomologyProfile(pair.name, coefficients, groups)
    direct = homology(total, coefficients)
    if not profile.same_groups(direct):
        raise InexactSequence(
            f"Sequence for {pair.name} gives {profile.render()}, cells give {direct.render()}"
        )
    logging.info(f"H({pair.name}; {coefficients}) = {profile.render()}")
    return profile


# --- Orbit spaces ---
def curated_complex(stage: str) -> ChainComplex:
    import complexes

    return complexes.curated_complex(stage)


def orbit_space_homology(n: int, coefficients: str = Z) -> HomologyProfile:
    """
    H(G(n,2)/T^n). For n = 4 this is the homology of the S^5 fixture, since
    G(4,2)/T^4 is homeomorphic to S^5; n = 5 is assembled through the
    filtration V1 ⊂ V2 ⊂ V3.
    """
    import complexes

    if n == 4:
        profile = homology(complexes.curated_complex("g42"), coefficients)
    elif n == 5:
        profile = assemble_pair(complexes.pair_assembly("V3"), coefficients)
    else:
        raise Unsupported(f"Orbit-space homology is modelled for n = 4, 5, not {n}")
    profile.space = f"G({n},2)/T^{n}"
    return profile


def quotient_by_g42_homology() -> HomologyProfile:
    """H(X), X the orbit space of G(5,2) with one octahedral 5-sphere collapsed, checked against S^3 * CP^2."""
    import complexes

    profile = homology(complexes.curated_complex("X"))
    join = join_profile(complexes.curated_complex("S3"), complexes.curated_complex("CP2"))
    if not profile.same_groups(join):
        raise InternalAssertion(f"H(X) = {profile.render()} but H(S3*CP2) = {join.render()}")
    return profile


def top_class_holds(n: int) -> bool:
    """H_(3n-7) of the orbit space is Z."""
    return orbit_space_homology(n).group(3 * n - 7) == HomologyGroup(1)

# params.py
"""
Parameters of the main stratum of G(5,2) and its universal compactification.

A main-stratum plane in chart ij has six chart coordinates z1..z6 (see
plucker.chart_coordinates). Its torus orbit is recorded by three points of CP^1

    (c1:c1') = (z1 z5 : z2 z4), (c2:c2') = (z1 z6 : z3 z4), (c3:c3') = (z2 z6 : z3 z5)

on the cubic c1 c2' c3 = c1' c2 c3'. The universal space is the cubic blown up
at ((1:1),(1:1),(1:1)); points on the exceptional line are `Divisor`s.
"""
import random
import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import config
from exact import GaussianRational, gaussian
from exceptions import (
    CenterWithoutDirection, DegenerateTriple, InternalAssertion,
    NotMainStratum, Unsupported,
)
from plucker import (
    Pair, PluckerVector, all_pairs, chart_coordinates, pair_key,
    plane_from_chart, plucker_coordinates, random_gaussian,
)
from polytope import HYPERSIMPLEX, K7, K8, K9, OCTAHEDRON, PRISM6
from strata import AdmissibleSet, stratum_kind
from symmetry import act, permutation_of

MAIN_CHART: Pair = (1, 2)


# --- CP^1 ---
@dataclass(frozen=True)
class ProjectivePoint1:
    """(a : b), stored as (a/b : 1) or (1 : 0)."""
    a: GaussianRational
    b: GaussianRational

    def __post_init__(self):
        a, b = gaussian(self.a), gaussian(self.b)
        if not a and not b:
            raise DegenerateTriple("(0:0) is not a point of CP^1")
        if b:
            a, b = a / b, GaussianRational(1)
        else:
            a = GaussianRational(1)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def in_A(self) -> bool:
        return self in SPECIAL_POINTS

    def inverse(self) -> "ProjectivePoint1":
        """(a:b) -> (b:a)."""
        return ProjectivePoint1(self.b, self.a)

    def render(self) -> str:
        return f"({self.a.render()}:{self.b.render()})"

    def __repr__(self):
        return self.render()


INFINITY = ProjectivePoint1(1, 0)
ZERO = ProjectivePoint1(0, 1)
ONE = ProjectivePoint1(1, 1)
SPECIAL_POINTS = (INFINITY, ZERO, ONE)


def point_or_none(a, b) -> Optional[ProjectivePoint1]:
    a, b = gaussian(a), gaussian(b)
    return None if not a and not b else ProjectivePoint1(a, b)


def parse_projective(text: str) -> ProjectivePoint1:
    inner = text.strip().lstrip("(").rstrip(")")
    a, _, b = inner.partition(":")
    return ProjectivePoint1(GaussianRational.parse(a), GaussianRational.parse(b))


# --- Triples on the cubic ---
@dataclass(frozen=True)
class ParamTriple:
    c1: ProjectivePoint1
    c2: ProjectivePoint1
    c3: ProjectivePoint1

    def __post_init__(self):
        if self.c1.a * self.c2.b * self.c3.a != self.c1.b * self.c2.a * self.c3.b:
            raise DegenerateTriple(f"{self.render()} is not on the cubic c1 c2' c3 = c1' c2 c3'")

    def __iter__(self):
        return iter((self.c1, self.c2, self.c3))

    def __getitem__(self, k: int) -> ProjectivePoint1:
        return (self.c1, self.c2, self.c3)[k]

    @property
    def is_main(self) -> bool:
        return not any(c.in_A for c in self)

    def render(self) -> str:
        return "(" + ",".join(c.render() for c in (self.c1, self.c2, self.c3)) + ")"

    def to_json(self) -> List[str]:
        return [c.render() for c in self]


CENTER = ParamTriple(ONE, ONE, ONE)


def triple(c1, c2, c3) -> ParamTriple:
    """Builds a triple from ProjectivePoint1s or (a, b) pairs."""
    points = [c if isinstance(c, ProjectivePoint1) else ProjectivePoint1(*c) for c in (c1, c2, c3)]
    return ParamTriple(*points)


def raw_chart_params(z: Sequence) -> Tuple[Optional[ProjectivePoint1], ...]:
    """The three ratios; an undetermined ratio (0:0) is None."""
    z1, z2, z3, z4, z5, z6 = (gaussian(x) for x in z)
    return (
        point_or_none(z1 * z5, z2 * z4),
        point_or_none(z1 * z6, z3 * z4),
        point_or_none(z2 * z6, z3 * z5),
    )


def chart_params(chart: Pair, z: Sequence) -> ParamTriple:
    """Parameters of a main-stratum point given by its chart coordinates."""
    ratios = raw_chart_params(z)
    if any(c is None or c.in_A for c in ratios):
        raise NotMainStratum(
            f"Chart {pair_key(chart)} coordinates do not describe a main-stratum point"
        )
    return ParamTriple(*ratios)


def plane_params(p: PluckerVector, chart: Pair = MAIN_CHART) -> ParamTriple:
    return chart_params(chart, chart_coordinates(p, chart))


def partial_params(p: PluckerVector, chart: Pair = MAIN_CHART) -> Tuple[Optional[ProjectivePoint1], ...]:
    return raw_chart_params(chart_coordinates(p, chart))


def representative_of_params(chart: Pair, t: ParamTriple) -> PluckerVector:
    """A main-stratum plane with parameters t in the chart, normalized by z1 = z4 = 1."""
    if not t.is_main:
        raise DegenerateTriple(f"{t.render()} is not a main-stratum triple")
    x = t.c1.a / t.c1.b
    y = t.c2.a / t.c2.b
    z = (1, 1, 1, 1, x, y)
    return plucker_coordinates(plane_from_chart(5, chart, z))


def transition(chart_a: Pair, chart_b: Pair, t: ParamTriple) -> ParamTriple:
    """Change of chart by re-reading the coordinates of a representative plane."""
    p = representative_of_params(chart_a, t)
    return plane_params(p, chart_b)


def transition_12_13(t: ParamTriple) -> ParamTriple:
    """Closed form of the change from chart 12 to chart 13 on the main stratum."""
    (c1, d1), (c2, d2), (c3, d3) = ((c.a, c.b) for c in t)
    return triple(
        (c1, c1 - d1),
        (c2, c2 - d2),
        ((c1 - d1) * d2 * c3, d1 * (c2 - d2) * d3),
    )


# --- Universal space of parameters ---
@dataclass(frozen=True)
class Regular:
    t: ParamTriple

    def __post_init__(self):
        if self.t == CENTER:
            raise CenterWithoutDirection("The blowup center needs a direction")

    def render(self) -> str:
        return self.t.render()


@dataclass(frozen=True)
class Divisor:
    """Point (center, x) of the exceptional line."""
    x: ProjectivePoint1

    def render(self) -> str:
        return f"(center,{self.x.render()})"


UniversalPoint = Union[Regular, Divisor]


def blowup_coordinate(t: ParamTriple) -> Optional[ProjectivePoint1]:
    """((c1 - c1')/c1 : (c2 - c2')/c2), cleared of denominators; None where undetermined."""
    (c1, d1), (c2, d2) = (t.c1.a, t.c1.b), (t.c2.a, t.c2.b)
    return point_or_none((c1 - d1) * c2, (c2 - d2) * c1)


def lift_to_blowup(t: ParamTriple, direction: Optional[ProjectivePoint1] = None) -> UniversalPoint:
    if t == CENTER:
        if direction is None:
            raise CenterWithoutDirection("Lifting the center needs a direction on the exceptional line")
        return Divisor(direction)
    return Regular(t)


def blowdown(u: UniversalPoint) -> ParamTriple:
    return CENTER if isinstance(u, Divisor) else u.t


def tilde_transition_12_13(u: UniversalPoint) -> UniversalPoint:
    """
    The change of chart 12 -> 13 extended to the universal space. It is an
    involution, so it is also the change 13 -> 12.
    """
    if isinstance(u, Divisor):
        return Regular(ParamTriple(INFINITY, INFINITY, u.x))
    t = u.t
    (c1, d1), (c2, d2), (c3, d3) = ((c.a, c.b) for c in t)
    if not d1 and not d2:
        return Divisor(t.c3)
    third = point_or_none((c1 - d1) * d2 * c3, d1 * (c2 - d2) * d3)
    if third is not None:
        return Regular(triple((c1, c1 - d1), (c2, c2 - d2), third))
    if not d1 and not c3:
        return Regular(triple(ONE, (c2, c2 - d2), (c2, c2 - d2)))
    if not d2 and not d3:
        return Regular(triple((c1, c1 - d1), ONE, (c1 - d1, c1)))
    raise InternalAssertion(f"No extension of the chart change at {t.render()}")


tilde_transition_13_12 = tilde_transition_12_13


# --- Sampling ---
def random_cp1(rng: random.Random, avoid_special: bool = True, special_rate: float = 0.25) -> ProjectivePoint1:
    if not avoid_special and rng.random() < special_rate:
        return rng.choice(SPECIAL_POINTS)
    while True:
        value = random_gaussian(rng, nonzero=True)
        point = ProjectivePoint1(value, rng.randint(1, config.ENTRY_RANGE))
        if not point.in_A:
            return point


def _solve_cubic(known: Dict[int, ProjectivePoint1], missing: int) -> Optional[ProjectivePoint1]:
    """The coordinate at index `missing` (0-based) forced by the cubic."""
    if missing == 2:
        c1, c2 = known[0], known[1]
        return point_or_none(c1.b * c2.a, c1.a * c2.b)
    if missing == 1:
        c1, c3 = known[0], known[2]
        return point_or_none(c1.a * c3.a, c1.b * c3.b)
    c2, c3 = known[1], known[2]
    return point_or_none(c2.a * c3.b, c2.b * c3.a)


def random_on_cubic(
    rng: random.Random,
    avoid: Sequence[int] = (0, 1, 2),
    free_special: bool = False,
) -> ParamTriple:
    """
    A random point of the cubic with c_k outside A for k in `avoid`. The other
    coordinates may hit A when `free_special` is set.
    """
    while True:
        missing = rng.choice(list(avoid))
        known = {
            k: random_cp1(rng, avoid_special=(k in avoid or not free_special))
            for k in range(3) if k != missing
        }
        solved = _solve_cubic(known, missing)
        if solved is None:
            continue
        known[missing] = solved
        t = ParamTriple(known[0], known[1], known[2])
        if t != CENTER and all(not t[k].in_A for k in avoid):
            return t


def sample_main_triples(rng: random.Random, count: int) -> List[ParamTriple]:
    return [random_on_cubic(rng) for _ in range(count)]


def check_transitions(seed: int, samples: int, chart_triples: int = config.COCYCLE_TRIPLES) -> Dict[str, int]:
    """Failure counts of the closed form against the round trip and of the cocycle law."""
    rng = random.Random(seed)
    closed_form = 0
    for t in sample_main_triples(rng, samples):
        if transition_12_13(t) != transition((1, 2), (1, 3), t):
            closed_form += 1
    charts = all_pairs(5)
    triples = list(permutations(charts, 3))
    cocycle = 0
    for a, b, c in rng.sample(triples, chart_triples):
        t = random_on_cubic(rng)
        if transition(b, c, transition(a, b, t)) != transition(a, c, t):
            cocycle += 1
    identity = sum(1 for t in sample_main_triples(rng, 5) if transition((1, 2), (1, 2), t) != t)
    logging.info(
        f"Transition check: {samples} closed-form samples, {chart_triples} chart triples "
        f"(failures: {closed_form}, {cocycle}, {identity})"
    )
    return {"closed_form": closed_form, "cocycle": cocycle, "identity": identity}


# --- Virtual spaces of parameters ---
CP1 = "CP1"
CP1_A = "CP1_A"
Slot = Union[ProjectivePoint1, str]


def _domain_ok(c: ProjectivePoint1, domain: str) -> bool:
    return domain == CP1 or not c.in_A


def _slot_value(slot: Slot, c: ProjectivePoint1) -> ProjectivePoint1:
    if slot == "c":
        return c
    if slot == "1/c":
        return c.inverse()
    return slot


@dataclass(frozen=True)
class PointPiece:
    point: UniversalPoint

    def contains(self, u: UniversalPoint) -> bool:
        return u == self.point

    def sample(self, rng: random.Random) -> UniversalPoint:
        return self.point

    def matches_partial(self, partial: Sequence[Optional[ProjectivePoint1]]) -> bool:
        return _agrees(blowdown(self.point), partial)


@dataclass(frozen=True)
class CurvePiece:
    """c -> slots evaluated at c; at a c hitting the center the point is Divisor(center_direction)."""
    slots: Tuple[Slot, Slot, Slot]
    domain: str
    center_direction: Optional[ProjectivePoint1] = None

    def at(self, c: ProjectivePoint1) -> UniversalPoint:
        t = ParamTriple(*(_slot_value(s, c) for s in self.slots))
        if t == CENTER:
            return Divisor(self.center_direction)
        return Regular(t)

    def _parameter(self, values: Sequence[Optional[ProjectivePoint1]]) -> Optional[ProjectivePoint1]:
        for slot, value in zip(self.slots, values):
            if value is None:
                continue
            if slot == "c":
                return value
            if slot == "1/c":
                return value.inverse()
        return None

    def contains(self, u: UniversalPoint) -> bool:
        if isinstance(u, Divisor):
            if self.center_direction is None or u.x != self.center_direction:
                return False
            return any(self.at(c) == u for c in SPECIAL_POINTS if _domain_ok(c, self.domain))
        c = self._parameter(list(u.t))
        return c is not None and _domain_ok(c, self.domain) and self.at(c) == u

    def sample(self, rng: random.Random) -> UniversalPoint:
        return self.at(random_cp1(rng, avoid_special=self.domain == CP1_A))

    def matches_partial(self, partial: Sequence[Optional[ProjectivePoint1]]) -> bool:
        c = self._parameter(partial)
        if c is None:
            candidates = list(SPECIAL_POINTS) + [ProjectivePoint1(2, 1)]
        else:
            candidates = [c]
        return any(
            _domain_ok(x, self.domain) and _agrees(blowdown(self.at(x)), partial)
            for x in candidates
        )


@dataclass(frozen=True)
class DivisorPiece:
    domain: str

    def contains(self, u: UniversalPoint) -> bool:
        return isinstance(u, Divisor) and _domain_ok(u.x, self.domain)

    def sample(self, rng: random.Random) -> UniversalPoint:
        return Divisor(random_cp1(rng, avoid_special=self.domain == CP1_A))

    def matches_partial(self, partial: Sequence[Optional[ProjectivePoint1]]) -> bool:
        return _agrees(CENTER, partial)


@dataclass(frozen=True)
class SurfacePiece:
    """Points of the cubic whose coordinates with index in `avoid` (0-based) lie outside A."""
    avoid: Tuple[int, ...]

    def contains(self, u: UniversalPoint) -> bool:
        return isinstance(u, Regular) and all(not u.t[k].in_A for k in self.avoid)

    def sample(self, rng: random.Random) -> UniversalPoint:
        return Regular(random_on_cubic(rng, self.avoid, free_special=len(self.avoid) < 3))

    def matches_partial(self, partial: Sequence[Optional[ProjectivePoint1]]) -> bool:
        if any(partial[k] is None or partial[k].in_A for k in self.avoid):
            return False
        if all(c is not None for c in partial):
            try:
                ParamTriple(*partial)
            except DegenerateTriple:
                return False
        return True


Piece = Union[PointPiece, CurvePiece, DivisorPiece, SurfacePiece]


def _agrees(t: ParamTriple, partial: Sequence[Optional[ProjectivePoint1]]) -> bool:
    return all(value is None or value == t[k] for k, value in enumerate(partial))


@dataclass(frozen=True)
class VirtualFamily:
    sigma: AdmissibleSet
    chart: Pair
    pieces: Tuple[Piece, ...]

    def contains(self, u: UniversalPoint) -> bool:
        return any(piece.contains(u) for piece in self.pieces)

    def sample(self, rng: random.Random, count: int) -> List[UniversalPoint]:
        return [rng.choice(self.pieces).sample(rng) for _ in range(count)]

    def matches_partial(self, partial: Sequence[Optional[ProjectivePoint1]]) -> bool:
        return any(piece.matches_partial(partial) for piece in self.pieces)

    def describe(self) -> List[str]:
        return [_describe_piece(p) for p in self.pieces]


def _describe_slot(slot: Slot) -> str:
    return slot if isinstance(slot, str) else slot.render()


def _describe_piece(piece: Piece) -> str:
    if isinstance(piece, PointPiece):
        return piece.point.render()
    if isinstance(piece, CurvePiece):
        return "(" + ",".join(_describe_slot(s) for s in piece.slots) + f"), c in {piece.domain}"
    if isinstance(piece, DivisorPiece):
        return f"(center,c), c in {piece.domain}"
    names = ",".join(f"c{k + 1}" for k in piece.avoid)
    return f"cubic with {names} outside A"


# Chart-12 curves of the 4-dimensional strata K_ij(9); index pair -> (slots, direction at the center)
_CURVES: Dict[Pair, Tuple[Tuple[Slot, Slot, Slot], Optional[ProjectivePoint1]]] = {
    (2, 3): ((ZERO, ZERO, "c"), None),
    (2, 4): ((INFINITY, "c", ZERO), None),
    (2, 5): (("c", INFINITY, INFINITY), None),
    (1, 3): ((INFINITY, INFINITY, "c"), None),
    (1, 4): ((ZERO, "c", INFINITY), None),
    (1, 5): (("c", ZERO, ZERO), None),
    (3, 4): ((ONE, "c", "c"), ZERO),
    (3, 5): (("c", ONE, "1/c"), INFINITY),
    (4, 5): (("c", "c", ONE), ONE),
}

# Chart-12 points of the strata K_{ij,kl}
_K8_POINTS: Dict[Tuple[Pair, Pair], UniversalPoint] = {
    ((1, 4), (2, 3)): Regular(ParamTriple(ZERO, ZERO, INFINITY)),
    ((1, 3), (2, 4)): Regular(ParamTriple(INFINITY, INFINITY, ZERO)),
    ((1, 5), (2, 4)): Regular(ParamTriple(INFINITY, ZERO, ZERO)),
    ((2, 3), (4, 5)): Regular(ParamTriple(ZERO, ZERO, ONE)),
    ((2, 4), (3, 5)): Regular(ParamTriple(INFINITY, ONE, ZERO)),
    ((2, 5), (3, 4)): Regular(ParamTriple(ONE, INFINITY, INFINITY)),
    ((1, 5), (2, 3)): Regular(ParamTriple(ZERO, ZERO, ZERO)),
    ((1, 3), (2, 5)): Regular(ParamTriple(INFINITY, INFINITY, INFINITY)),
    ((1, 4), (2, 5)): Regular(ParamTriple(ZERO, INFINITY, INFINITY)),
    ((1, 3), (4, 5)): Regular(ParamTriple(INFINITY, INFINITY, ONE)),
    ((1, 4), (3, 5)): Regular(ParamTriple(ZERO, ONE, INFINITY)),
    ((1, 5), (3, 4)): Regular(ParamTriple(ONE, ZERO, ZERO)),
    ((1, 2), (3, 4)): Divisor(ZERO),
    ((1, 2), (3, 5)): Divisor(INFINITY),
    ((1, 2), (4, 5)): Divisor(ONE),
}


def _curve(pair: Pair, domain: str) -> Piece:
    if pair == MAIN_CHART:
        return DivisorPiece(domain)
    slots, direction = _CURVES[pair]
    return CurvePiece(slots, domain, direction)


def _chart12_pieces(sigma: AdmissibleSet) -> Tuple[Piece, ...]:
    tag, indices = stratum_kind(sigma)
    if tag == HYPERSIMPLEX:
        return (SurfacePiece((0, 1, 2)),)
    if tag == K9:
        return (_curve(indices, CP1_A),)
    if tag == K8:
        return (PointPiece(_K8_POINTS[indices]),)
    if tag in (K7, PRISM6):
        return (_curve(indices, CP1),)
    if tag == OCTAHEDRON:
        z = indices[0]
        if z in (1, 2):
            curves = [_curve(p, CP1_A) for p in _CURVES if z in p]
            return (SurfacePiece((0, 1, 2)), DivisorPiece(CP1_A), *curves)
        return (SurfacePiece((5 - z,)),)
    raise Unsupported(f"No virtual space of parameters is tabulated for {tag}")


def virtual_space(sigma: AdmissibleSet, chart: Pair = MAIN_CHART) -> VirtualFamily:
    """
    Limits of main-stratum parameters at W_sigma, read in the given chart.
    Chart ij is chart 12 of the stratum moved back by the permutation 1 -> i, 2 -> j.
    """
    if sigma.n != 5:
        raise Unsupported("Virtual spaces of parameters are defined for n = 5")
    s = permutation_of(tuple(sorted(chart)))
    moved = act(s ** -1, sigma)
    return VirtualFamily(sigma, tuple(sorted(chart)), _chart12_pieces(moved))


# --- Embedding into (CP^1)^5 ---
@dataclass(frozen=True)
class Embedding:
    coords: Tuple[ProjectivePoint1, ...]
    valid: bool

    def to_json(self) -> dict:
        return {"coords": [c.render() for c in self.coords], "valid": self.valid}


def embedding_equations(e: Sequence[ProjectivePoint1]) -> Tuple[GaussianRational, ...]:
    """Residues of the four trilinear equations cutting out the image."""
    (e1, f1), (e2, f2), (e3, f3), (e4, f4), (e5, f5) = ((x.a, x.b) for x in e)
    return (
        e1 * f2 * e3 - f1 * e2 * f3,
        f2 * e4 * (e1 - f1) - f1 * f4 * (e2 - f2),
        (e1 - f1) * e2 * e5 - e1 * (e2 - f2) * f5,
        e3 * f4 * e5 - f3 * e4 * f5,
    )


def _embedding(coords: Sequence[ProjectivePoint1]) -> Embedding:
    coords = tuple(coords)
    return Embedding(coords, not any(embedding_equations(coords)))


def embed_five(source: Union[ParamTriple, PluckerVector]) -> Embedding:
    """Cross-ratio coordinates of a main-stratum point."""
    p = representative_of_params(MAIN_CHART, source) if isinstance(source, ParamTriple) else source
    if p.n != 5 or len(p.coords) != 10:
        raise NotMainStratum("The embedding is defined on the main stratum of G(5,2)")
    P = lambda i, j: p[(i, j)]
    coords = (
        ProjectivePoint1(P(1, 3) * P(2, 4), P(1, 4) * P(2, 3)),
        ProjectivePoint1(P(1, 3) * P(2, 5), P(1, 5) * P(2, 3)),
        ProjectivePoint1(P(1, 4) * P(2, 5), P(1, 5) * P(2, 4)),
        ProjectivePoint1(P(1, 4) * P(3, 5), P(1, 5) * P(3, 4)),
        ProjectivePoint1(P(2, 4) * P(3, 5), P(2, 5) * P(3, 4)),
    )
    return _embedding(coords)


def embed_universal(u: UniversalPoint) -> Embedding:
    """
    The embedding extended to the whole universal space of parameters.

    Coordinates agree with embed_five, so the first three are e_i = 1/c_i. On
    the K13(9) family (∞, ∞, c) the image is ((0:1),(0:1),(c':c),(1:1),(c:c')).
    """
    if isinstance(u, Divisor):
        return _embedding((ONE, ONE, ONE, u.x.inverse(), u.x.inverse()))
    (c1, d1), (c2, d2), (c3, d3) = ((c.a, c.b) for c in u.t)
    e1, e2, e3 = (c.inverse() for c in u.t)
    e4 = point_or_none(c1 * (c2 - d2), c2 * (c1 - d1))
    e5 = point_or_none(d1 * (c2 - d2), d2 * (c1 - d1))
    if e4 is None:
        e4 = ProjectivePoint1(e3.a * e5.a, e3.b * e5.b)
    if e5 is None:
        e5 = ProjectivePoint1(e3.b * e4.a, e3.a * e4.b)
    return _embedding((e1, e2, e3, e4, e5))


def tabulated_strata() -> List[AdmissibleSet]:
    """Strata of G(5,2) with a tabulated virtual space of parameters."""
    from strata import enumerate_admissible_sets

    supported = (HYPERSIMPLEX, K9, K8, K7, OCTAHEDRON, PRISM6)
    return [s for s in enumerate_admissible_sets(5) if stratum_kind(s)[0] in supported]


def check_virtual_spaces(seed: int, samples: int = config.VIRTUAL_SAMPLES) -> Dict[str, int]:
    """
    Failure counts for: the chart change carrying chart-12 families onto
    chart-13 families (both ways), the embedding equations on every family, and
    the projection of families onto the partial parameters of their strata.
    """
    from strata import random_point

    rng = random.Random(seed)
    equivariance = embedding = projection = 0
    for sigma in tabulated_strata():
        family12 = virtual_space(sigma, (1, 2))
        points12 = family12.sample(rng, samples)
        embedding += sum(1 for u in points12 if not embed_universal(u).valid)
        if (1, 2) in sigma and (1, 3) in sigma:
            family13 = virtual_space(sigma, (1, 3))
            equivariance += sum(1 for u in points12 if not family13.contains(tilde_transition_12_13(u)))
            points13 = family13.sample(rng, samples)
            equivariance += sum(1 for u in points13 if not family12.contains(tilde_transition_13_12(u)))
        if (1, 2) in sigma and len(sigma) < 10:
            plane = plucker_coordinates(random_point(sigma, rng))
            if not family12.matches_partial(partial_params(plane)):
                projection += 1
    logging.info(
        f"Virtual-space check (seed={seed}): equivariance {equivariance}, "
        f"embedding {embedding}, projection {projection} failures"
    )
    return {"equivariance": equivariance, "embedding": embedding, "projection": projection}


# --- Euler characteristic ---
def euler_characteristic_universal() -> int:
    """χ of the universal space: CP^1 x CP^1 blown up at 3 points, or CP^2 blown up at 4."""
    from homology import curated_complex, euler_characteristic

    via_quadric = euler_characteristic(curated_complex("CP1xCP1")) + 3
    via_plane = euler_characteristic(curated_complex("CP2")) + 4
    if via_quadric != via_plane:
        raise InternalAssertion(f"Blowup models disagree: {via_quadric} != {via_plane}")
    return via_quadric


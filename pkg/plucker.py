# plucker.py
"""
Plücker coordinates of 2-planes in C^n.

Pairs are 1-based and stored sorted; the antisymmetric convention
P(j, i) = -P(i, j) is only used internally by `PluckerVector.minor`.
"""
import random
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import config
from exact import GaussianRational, gaussian, rank_rational
from exceptions import NotMainStratum, ParseError, RankDeficient

Pair = Tuple[int, int]


def all_pairs(n: int) -> List[Pair]:
    return list(combinations(range(1, n + 1), 2))


def sorted_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def pair_key(pair: Pair) -> str:
    return f"{pair[0]}{pair[1]}"


def parse_pair(key) -> Pair:
    """Accepts "12", "1,2", [1, 2] or (1, 2)."""
    if isinstance(key, (list, tuple)):
        digits = [int(x) for x in key]
    else:
        text = str(key).strip().replace(",", "").replace(" ", "")
        if len(text) != 2 or not text.isdigit():
            raise ParseError(f"Not a pair of row indices: {key!r}")
        digits = [int(text[0]), int(text[1])]
    if len(digits) != 2 or digits[0] == digits[1] or min(digits) < 1:
        raise ParseError(f"Not a pair of distinct row indices: {key!r}")
    return sorted_pair(*digits)


# --- Planes ---
@dataclass(frozen=True)
class PlaneMatrix:
    """An n x 2 matrix of full rank spanning a plane in C^n."""
    n: int
    rows: Tuple[Tuple[GaussianRational, GaussianRational], ...]

    def __post_init__(self):
        rows = tuple((gaussian(a), gaussian(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise ParseError(f"Expected {self.n} rows, got {len(rows)}")
        if rank_rational(rows) < 2:
            raise RankDeficient("The matrix does not have rank 2")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PlaneMatrix":
        parsed = []
        for row in rows:
            if len(row) != 2:
                raise ParseError(f"Each row needs two entries, got {row!r}")
            parsed.append(tuple(gaussian(x) for x in row))
        return cls(len(parsed), tuple(parsed))

    def minor(self, i: int, j: int) -> GaussianRational:
        (a, b), (c, d) = self.rows[i - 1], self.rows[j - 1]
        return a * d - b * c

    def to_json(self) -> List[List[str]]:
        return [[a.render(), b.render()] for a, b in self.rows]


# --- Plücker vectors ---
@dataclass(frozen=True)
class PluckerVector:
    """Projective point with coordinates indexed by sorted pairs; absent pairs are zero."""
    n: int
    coords: Mapping[Pair, GaussianRational] = field(default_factory=dict)

    def __post_init__(self):
        normalized: Dict[Pair, GaussianRational] = {}
        for key, value in dict(self.coords).items():
            pair = parse_pair(key)
            if pair[1] > self.n:
                raise ParseError(f"Pair {pair} out of range for n={self.n}")
            value = gaussian(value)
            if value:
                normalized[pair] = value
        if not normalized:
            raise RankDeficient("All Plücker coordinates vanish")
        object.__setattr__(self, "coords", dict(sorted(normalized.items())))

    def __getitem__(self, pair: Pair) -> GaussianRational:
        return self.coords.get(sorted_pair(*pair), GaussianRational())

    def minor(self, i: int, j: int) -> GaussianRational:
        if i == j:
            return GaussianRational()
        value = self[(i, j)]
        return value if i < j else -value

    def scaled(self, factor) -> "PluckerVector":
        return PluckerVector(self.n, {k: v * gaussian(factor) for k, v in self.coords.items()})

    def same_point(self, other: "PluckerVector") -> bool:
        """Projective equality: one common nonzero scalar relates the two vectors."""
        if self.n != other.n:
            return False
        ref = next(iter(self.coords))
        if not other[ref]:
            return False
        return all(
            self[p] * other[ref] == other[p] * self[ref] for p in all_pairs(self.n)
        )

    def to_json(self) -> dict:
        return {"n": self.n, "coords": {pair_key(p): v.render() for p, v in self.coords.items()}}


def plucker_from_json(data: Mapping) -> PluckerVector:
    try:
        n = int(data["n"])
        coords = {parse_pair(k): GaussianRational.parse(v) for k, v in data["coords"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed Plücker vector: {e}")
    return PluckerVector(n, coords)


def plucker_coordinates(m: PlaneMatrix) -> PluckerVector:
    """The 2x2 minors of rows i < j."""
    return PluckerVector(m.n, {(i, j): m.minor(i, j) for i, j in all_pairs(m.n)})


def support(p: PluckerVector):
    """Pairs with a nonzero coordinate, as an AdmissibleSet candidate."""
    from strata import AdmissibleSet

    return AdmissibleSet(p.n, frozenset(p.coords))


def verify_relations(p: PluckerVector) -> bool:
    """P_ij P_kl + P_jk P_il == P_ik P_jl for every i < j < k < l."""
    for i, j, k, l in combinations(range(1, p.n + 1), 4):
        if p[(i, j)] * p[(k, l)] + p[(j, k)] * p[(i, l)] != p[(i, k)] * p[(j, l)]:
            logging.debug(f"Plücker relation {i}{j}{k}{l} fails")
            return False
    return True


# --- Charts ---
def chart_coordinates(p: PluckerVector, chart: Pair) -> Tuple[GaussianRational, ...]:
    """
    Coordinates of p in the chart where P(i, j) != 0.

    The plane is normalized so that row i is (1, 0) and row j is (0, 1); the
    remaining rows p1 < p2 < ... give (a_p1_1, a_p2_1, ..., a_p1_2, a_p2_2, ...),
    first column then second column.
    """
    i, j = chart
    base = p.minor(i, j)
    if not base:
        raise NotMainStratum(f"The plane lies outside chart {pair_key(chart)}")
    rest = [r for r in range(1, p.n + 1) if r not in (i, j)]
    first = [p.minor(r, j) / base for r in rest]
    second = [p.minor(i, r) / base for r in rest]
    return tuple(first + second)


def plane_from_chart(n: int, chart: Pair, z: Sequence) -> PlaneMatrix:
    """Inverse of chart_coordinates on the level of matrices."""
    i, j = chart
    rest = [r for r in range(1, n + 1) if r not in (i, j)]
    rows: List[Tuple] = [None] * n
    rows[i - 1] = (1, 0)
    rows[j - 1] = (0, 1)
    half = len(rest)
    for k, r in enumerate(rest):
        rows[r - 1] = (z[k], z[k + half])
    return PlaneMatrix.from_rows(rows)


# --- Sampling ---
def random_gaussian(rng: random.Random, bound: int = config.ENTRY_RANGE, nonzero: bool = False) -> GaussianRational:
    while True:
        value = GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if value or not nonzero:
            return value


def random_plane(
    rng: random.Random,
    n: int,
    degenerate_rate: float = config.DEGENERATE_RATE,
    bound: int = config.ENTRY_RANGE,
) -> PlaneMatrix:
    """
    A seeded random plane; with probability `degenerate_rate` some rows are
    zeroed or replaced by multiples of other rows so that lower strata show up.
    """
    while True:
        rows = [[random_gaussian(rng, bound), random_gaussian(rng, bound)] for _ in range(n)]
        if rng.random() < degenerate_rate:
            for _ in range(rng.randint(1, n - 2)):
                target = rng.randrange(n)
                if rng.random() < 0.5:
                    rows[target] = [GaussianRational(), GaussianRational()]
                else:
                    source = rng.randrange(n)
                    factor = random_gaussian(rng, bound, nonzero=True)
                    rows[target] = [factor * x for x in rows[source]]
        if rank_rational(rows) == 2:
            return PlaneMatrix.from_rows(rows)


def random_planes(seed: int, count: int, n: int) -> Iterable[PlaneMatrix]:
    rng = random.Random(seed)
    logging.info(f"Sampling {count} random planes in C^{n} (seed={seed})")
    for _ in range(count):
        yield random_plane(rng, n)


def parse_matrix(data) -> PlaneMatrix:
    """A matrix given as a list of rows of Gaussian-rational literals."""
    if isinstance(data, Mapping):
        data = data.get("rows", data.get("matrix"))
    if not isinstance(data, (list, tuple)) or not data:
        raise ParseError("A matrix must be a nonempty list of rows")
    return PlaneMatrix.from_rows(data)

# symmetry.py
"""The symmetric group acting on admissible sets by permuting row indices."""
import logging
from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

from exceptions import ParseError
from plucker import Pair
from strata import AdmissibleSet, enumerate_admissible_sets


def permutation(images: Sequence[int]) -> Permutation:
    """Permutation from 1-based images: images[k] is the image of k + 1."""
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ParseError(f"Not a permutation of 1..{len(images)}: {list(images)}")
    return Permutation([i - 1 for i in images])


def act(s: Permutation, sigma: AdmissibleSet) -> AdmissibleSet:
    pairs = frozenset(tuple(sorted((s(i - 1) + 1, s(j - 1) + 1))) for i, j in sigma.pairs)
    return AdmissibleSet(sigma.n, pairs)


def permutation_of(chart: Pair, n: int = 5) -> Permutation:
    """The permutation sending 1 -> i, 2 -> j and 3.. onto the rest in increasing order."""
    i, j = chart
    rest = [r for r in range(1, n + 1) if r not in (i, j)]
    return permutation([i, j] + rest)


def stabilizer(sigma: AdmissibleSet) -> List[Permutation]:
    return [s for s in SymmetricGroup(sigma.n).generate() if act(s, sigma) == sigma]


@dataclass(frozen=True)
class Orbit:
    members: Tuple[AdmissibleSet, ...]
    stabilizer_order: int

    @property
    def generator(self) -> AdmissibleSet:
        return self.members[0]


def _closure(sigma: AdmissibleSet, generators: List[Permutation]) -> List[AdmissibleSet]:
    seen = {sigma}
    frontier = [sigma]
    while frontier:
        current = frontier.pop()
        for g in generators:
            image = act(g, current)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return sorted(seen, key=lambda s: s.sorted_pairs())


def orbit_partition(n: int) -> List[Orbit]:
    """S_n orbits of all admissible sets, closed under the group's two generators."""
    generators = list(SymmetricGroup(n).generators)
    remaining = enumerate_admissible_sets(n)
    placed = set()
    orbits = []
    for sigma in remaining:
        if sigma in placed:
            continue
        members = _closure(sigma, generators)
        placed.update(members)
        orbits.append(Orbit(tuple(members), factorial(n) // len(members)))
    logging.info(f"{len(orbits)} orbits of admissible sets for n={n}")
    return orbits


@dataclass(frozen=True)
class FundamentalRow:
    p: int
    m_p: int
    q_p: int
    generators: Tuple[AdmissibleSet, ...]


@dataclass(frozen=True)
class FundamentalTable:
    rows: Tuple[FundamentalRow, ...]

    @property
    def orbit_count(self) -> int:
        return sum(r.q_p for r in self.rows)

    def row(self, p: int) -> FundamentalRow:
        return next(r for r in self.rows if r.p == p)

    def to_tsv(self) -> str:
        lines = ["p\tm_p\tq_p\tgenerators"]
        for r in self.rows:
            gens = " ".join(g.render() for g in r.generators)
            lines.append(f"{r.p}\t{r.m_p}\t{r.q_p}\t{gens}")
        return "\n".join(lines)


def fundamental_table(n: int) -> FundamentalTable:
    """Strata grouped by vertex count p: m_p strata falling into q_p orbits."""
    by_size: Dict[int, List[Orbit]] = defaultdict(list)
    for orbit in orbit_partition(n):
        by_size[len(orbit.generator)].append(orbit)
    rows = tuple(
        FundamentalRow(
            p=p,
            m_p=sum(len(o.members) for o in orbits),
            q_p=len(orbits),
            generators=tuple(o.generator for o in orbits),
        )
        for p, orbits in sorted(by_size.items(), reverse=True)
    )
    return FundamentalTable(rows)

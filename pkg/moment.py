# moment.py
"""The moment map of the torus action and its regular points and values."""
import random
import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from exceptions import OutsideOpenHypersimplex, Unsupported
from plucker import PluckerVector, support
from polytope import PRISM6, polytope_of, relative_interior_contains
from strata import AdmissibleSet, defect, enumerate_admissible_sets, stratum_kind

MomentPoint = Tuple[Fraction, ...]


def moment(p: PluckerVector) -> MomentPoint:
    """Sum of |P_ij|^2 Λ_ij divided by the sum of |P_ij|^2."""
    weights = {pair: value.norm2() for pair, value in p.coords.items()}
    total = sum(weights.values())
    point = [Fraction(0)] * p.n
    for (i, j), w in weights.items():
        point[i - 1] += w
        point[j - 1] += w
    return tuple(x / total for x in point)


def dmu_rank(p: PluckerVector) -> int:
    """Rank of the differential at p: the dimension of the admissible polytope."""
    return polytope_of(support(p)).dim


def is_regular_point(p: PluckerVector) -> bool:
    return defect(support(p)) == 0


def _check_open_hypersimplex(x: Sequence) -> MomentPoint:
    x = tuple(Fraction(v) for v in x)
    if sum(x) != 2 or not all(0 < v < 1 for v in x):
        raise OutsideOpenHypersimplex(f"{[str(v) for v in x]} is not in the open hypersimplex")
    return x


@lru_cache(maxsize=None)
def _positive_defect_strata(n: int) -> Tuple[AdmissibleSet, ...]:
    return tuple(s for s in enumerate_admissible_sets(n) if defect(s) > 0)


@lru_cache(maxsize=None)
def prism_strata() -> Tuple[AdmissibleSet, ...]:
    """The ten strata over the interior prisms of Δ(5,2)."""
    return tuple(s for s in _positive_defect_strata(5) if stratum_kind(s)[0] == PRISM6)


def singular_value_witnesses(x: Sequence) -> List[AdmissibleSet]:
    """Positive-defect strata whose open polytope contains x."""
    x = tuple(Fraction(v) for v in x)
    return [
        s for s in _positive_defect_strata(len(x))
        if relative_interior_contains(polytope_of(s), x)
    ]


def is_regular_value(x: Sequence, n: int = 5) -> bool:
    """Interior values of the moment map for G(5,2) are singular exactly on the open prisms."""
    if n != 5 or len(x) != 5:
        raise Unsupported("Regular values are only classified for n = 5")
    x = _check_open_hypersimplex(x)
    return not any(relative_interior_contains(polytope_of(s), x) for s in prism_strata())


def random_interior_value(rng: random.Random, on_prism: bool = False) -> MomentPoint:
    """
    A random rational point of the open hypersimplex. With `on_prism` it is put
    on a hyperplane x_i + x_j = 1 so that both verdicts get exercised.
    """
    if on_prism:
        i, j = rng.sample(range(5), 2)
        a = Fraction(rng.randint(1, 9), 10)
        rest = [k for k in range(5) if k not in (i, j)]
        weights = [rng.randint(1, 9) for _ in rest]
        x = [Fraction(0)] * 5
        x[i], x[j] = a, 1 - a
        for k, w in zip(rest, weights):
            x[k] = Fraction(w, sum(weights))
        return tuple(x)
    weights = [rng.randint(1, 20) for _ in range(10)]
    total = sum(weights)
    point = [Fraction(0)] * 5
    for w, (i, j) in zip(weights, [(a, b) for a in range(5) for b in range(a + 1, 5)]):
        point[i] += Fraction(w, total)
        point[j] += Fraction(w, total)
    return tuple(point)


def check_regular_values(seed: int, samples: int) -> List[MomentPoint]:
    """Sampled interior values where the prism rule and the general rule disagree."""
    rng = random.Random(seed)
    failures = []
    for k in range(samples):
        x = random_interior_value(rng, on_prism=k % 2 == 1)
        if is_regular_value(x) != (not singular_value_witnesses(x)):
            failures.append(x)
    logging.info(f"Regular-value check: {samples} samples, {len(failures)} disagreements")
    return failures

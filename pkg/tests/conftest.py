import random

import pytest

from plucker import all_pairs
from strata import admissible_set


def sigma_of(*pairs, n=5):
    """admissible_set from pair keys: sigma_of("12", "13", ...)."""
    return admissible_set(n, pairs)


def everything_but(*missing, n=5):
    keep = [p for p in all_pairs(n) if f"{p[0]}{p[1]}" not in missing]
    return admissible_set(n, keep)


@pytest.fixture
def rng():
    return random.Random(7)


@pytest.fixture
def hypersimplex_stratum():
    return admissible_set(5, all_pairs(5))


@pytest.fixture
def k9_45():
    """Rows 4 and 5 collinear, the rest in general position."""
    return everything_but("45")


@pytest.fixture
def octahedron_5():
    """Row 5 is zero."""
    return admissible_set(5, [p for p in all_pairs(5) if 5 not in p])


@pytest.fixture
def client(monkeypatch):
    from fastapi.testclient import TestClient

    import config
    import main

    monkeypatch.setattr(config, "AUTH_TOKEN", None)
    return TestClient(main.app)

import random
from functools import lru_cache
from pathlib import Path

import pytest

from stabred import Component, FiberConfiguration, Kind, Node, parse_fiber, stable_graphs
from stabred.stabilize import random_unstable_model

FIBERS = Path(__file__).resolve().parent.parent / "fibers"


def fiber(components, nodes=(), kind=Kind.REDUCED, genus=None):
    """Shorthand: components as (id, genus, mult) triples, nodes as id pairs."""
    return FiberConfiguration(
        tuple(Component(*c) for c in components), tuple(Node(*n) for n in nodes), kind, genus
    )


def hyperelliptic():
    comps = [("C0", 0, 2)] + [(f"T{i}", 0, 1) for i in range(1, 7)]
    return fiber(comps, [("C0", f"T{i}") for i in range(1, 7)], Kind.NORMAL_CROSSINGS)


def theta():
    return fiber([("A", 0, 1), ("B", 0, 1)], [("A", "B")] * 3, Kind.STABLE)


@lru_cache(maxsize=None)
def stable_pool(genera):
    return tuple(s for g in genera for s in stable_graphs(g, 8))


def random_reduced_configs(count, seed, genera=(2, 3, 4), max_moves=5):
    rng = random.Random(seed)
    pool = stable_pool(tuple(genera))
    return [random_unstable_model(rng.choice(pool), rng, rng.randint(0, max_moves)) for _ in range(count)]


@pytest.fixture
def hyper():
    return hyperelliptic()


@pytest.fixture
def fiber_file():
    def load(name):
        return parse_fiber((FIBERS / name).read_text())

    return load

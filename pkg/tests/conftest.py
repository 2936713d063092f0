import random

import pytest

from cywps.quasismooth import iter_weight_partitions
from cywps.wps import WeightVector, weight_flags


def well_formed_vectors(dim, max_degree):
    """All sorted well-formed weight vectors with the given dimension."""
    for degree in range(dim + 1, max_degree + 1):
        for ws in iter_weight_partitions(dim, degree):
            w = WeightVector(ws)
            if weight_flags(w)[0]:
                yield w


def random_well_formed(rng: random.Random, dim: int, max_degree: int) -> WeightVector:
    while True:
        k = dim + 1
        cuts = sorted(rng.sample(range(1, max_degree), k - 1))
        ws = tuple(
            sorted(b - a for a, b in zip((0, *cuts), (*cuts, rng.randint(cuts[-1] + 1, max_degree))))
        )
        if any(x < 1 for x in ws):
            continue
        w = WeightVector(ws)
        if weight_flags(w)[0]:
            return w


@pytest.fixture(scope="session")
def k3_weight_vectors():
    """The 95 sorted transverse weight vectors with d = 3."""
    from cywps.quasismooth import census

    records = census(3, 100, "transverse")
    assert len(records) == 95
    return [WeightVector(r.weights) for r in records]

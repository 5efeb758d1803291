import random

import pytest

from galois7.families import known_witnesses
from galois7.intpoly import IntPoly


@pytest.fixture(scope="session")
def witness_corpus():
    """All curated labeled witnesses: 28 cyclotomic C7 rows, f_min, and the
    verified F42/S7/PSL/A7/D7 representatives."""
    return known_witnesses()


@pytest.fixture(scope="session")
def s7_height1_sample():
    """50 deterministic height-1 irreducible septics (all S7 at h=1)."""
    from galois7.dataset import enumerate_septics

    pool = [tup for tup in enumerate_septics(1, irreducible_only=True)]
    rng = random.Random(20240811)
    return [IntPoly.from_descending(t) for t in rng.sample(pool, 50)]


def random_monic_septic(rng, bound=3):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(7)] + [1]
        if coeffs[0] != 0:
            return IntPoly(coeffs)

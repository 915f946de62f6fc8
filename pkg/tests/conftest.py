import random

import pytest

from setkernel.ordinals import ZERO, OrdinalCNF


def random_ordinal(rng: random.Random, depth: int = 2, max_terms: int = 3,
                   max_coeff: int = 4) -> OrdinalCNF:
    """Random CNF notation with nesting depth at most ``depth``."""
    if depth == 0 or rng.random() < 0.3:
        return OrdinalCNF.from_int(rng.randrange(max_coeff))
    exponents = set()
    while len(exponents) < rng.randrange(1, max_terms + 1):
        exponents.add(random_ordinal(rng, depth - 1, max_terms, max_coeff))
    ordered = sorted(exponents, reverse=True)
    if ordered and ordered[-1] == ZERO and rng.random() < 0.5:
        ordered.pop()
    terms = tuple((e, rng.randrange(1, max_coeff + 1)) for e in ordered)
    return OrdinalCNF(terms)


@pytest.fixture
def rng():
    return random.Random(20260823)

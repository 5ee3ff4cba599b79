import random

import pytest

from tangle3 import BraidWord, apply_word, initial_boundary_weights


def random_word(rng, max_len=8, indices=(0, 1, 2, 3, 4, 5), exponents=(1, -1)):
    k = rng.randrange(0, max_len + 1)
    return BraidWord.of(*[(rng.choice(indices), rng.choice(exponents))
                          for _ in range(k)])


@pytest.fixture(scope="session")
def corpus():
    """Random curve corpus shared across modules: (word, label, weights)."""
    rng = random.Random(20260808)
    out = []
    for _ in range(300):
        word = random_word(rng)
        label = rng.choice(["e1", "e2", "e3"])
        out.append((word, label, apply_word(initial_boundary_weights(label), word)))
    return out


@pytest.fixture(scope="session")
def charged_corpus():
    """Corpus biased toward dominant-diagonal curves and deep reductions."""
    rng = random.Random(5150)
    out = []
    for _ in range(150):
        word = random_word(rng, max_len=12, exponents=(1, 1, -1, -1, 2, -2, 3, -3))
        label = rng.choice(["e1", "e2", "e3"])
        out.append((word, label, apply_word(initial_boundary_weights(label), word)))
    return out

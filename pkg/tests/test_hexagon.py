import random

import pytest

from tangle3 import (
    GeneratorLetter,
    WeightVector,
    apply_generator,
    apply_word,
    compose,
    initial_boundary_weights,
    invert,
    parse_word,
    rotate_weights,
    swap_levels,
)
from tangle3.errors import MalformedCurveError
from tangle3.hexagon import apply_sigma1

# the published trajectory of dE2 under s5 s3 s1 s2^-1 s3 s1, innermost first
TRAJECTORY = [
    ((1, 1), {(1, 4): 1, (5, 6): 1}, {(1, 6): 1, (4, 5): 1}),
    ((3, 1), {(1, 5): 1, (5, 6): 1, (3, 4): 1},
     {(3, 5): 1, (4, 5): 1, (1, 6): 1}),
    ((2, -1), {(1, 4): 1, (4, 6): 1, (3, 4): 1, (5, 6): 2},
     {(3, 6): 1, (4, 6): 1, (1, 6): 1, (4, 5): 2}),
    ((1, 1), {(1, 4): 2, (1, 5): 2, (3, 4): 1, (5, 6): 3},
     {(1, 5): 1, (3, 5): 1, (1, 6): 3, (4, 5): 3}),
    ((3, 1), {(1, 5): 4, (3, 4): 3, (5, 6): 3, (3, 5): 1},
     {(1, 5): 1, (1, 6): 3, (4, 5): 3, (3, 5): 4}),
    ((5, 1), {(1, 5): 4, (3, 4): 3, (5, 6): 3, (3, 5): 1},
     {(1, 5): 1, (1, 6): 3, (4, 5): 3, (3, 5): 4}),
]

CONTINUATION = [
    ((5, 1), {(1, 5): 4, (3, 4): 3, (3, 5): 1, (5, 6): 3},
     {(1, 5): 1, (1, 6): 3, (3, 5): 4, (4, 5): 3}),
    ((3, 1), {(1, 5): 4, (3, 4): 3, (3, 5): 4, (5, 6): 3},
     {(1, 5): 1, (1, 6): 3, (3, 5): 7, (4, 5): 3}),
    ((1, 1), {(1, 5): 7, (3, 4): 3, (3, 5): 4, (5, 6): 3},
     {(1, 5): 4, (1, 6): 3, (3, 5): 7, (4, 5): 3}),
    ((2, -1), {(1, 4): 7, (3, 4): 7, (4, 6): 3, (5, 6): 14},
     {(1, 6): 7, (3, 6): 7, (4, 6): 3, (4, 5): 14}),
    ((3, 1), {(1, 5): 7, (3, 5): 7, (3, 4): 17, (5, 6): 17},
     {(1, 6): 7, (3, 6): 10, (3, 5): 14, (4, 5): 17}),
    ((1, 1), {(3, 5): 7, (3, 4): 17, (5, 6): 17, (1, 5): 24},
     {(1, 5): 7, (1, 6): 17, (4, 5): 17, (3, 5): 24}),
]


def seeds():
    return {lab: initial_boundary_weights(lab) for lab in ("e1", "e2", "e3")}


def test_boundary_seeds():
    s = seeds()
    assert s["e2"] == WeightVector.of({(4, 6): 1}, {(4, 6): 1})
    assert s["e1"] == WeightVector.of({(2, 6): 1}, {(2, 6): 1})
    assert s["e3"] == WeightVector.of({(2, 4): 1}, {(2, 4): 1})
    assert s["e1"] == rotate_weights(s["e2"], 2)
    assert s["e3"] == rotate_weights(s["e2"], -2)


def test_seed_enclosures_by_fixed_twists():
    # each seed is fixed exactly by the odd twist whose support misses it,
    # which pins down which puncture pair it surrounds
    s = seeds()
    fixing = {"e1": 3, "e2": 5, "e3": 1}
    for lab, vec in s.items():
        for k in (1, 3, 5):
            image = apply_generator(vec, GeneratorLetter(k, 1))
            assert (image == vec) == (k == fixing[lab])


def test_sigma1_on_seed():
    got = apply_sigma1(initial_boundary_weights("e2"))
    assert got == WeightVector.of({(1, 4): 1, (5, 6): 1}, {(1, 6): 1, (4, 5): 1})


def test_sigma1_zero_vector():
    assert apply_sigma1(WeightVector.zero()) == WeightVector.zero()


def test_published_trajectory():
    vec = initial_boundary_weights("e2")
    for (index, exponent), lower, upper in TRAJECTORY:
        vec = apply_generator(vec, GeneratorLetter(index, exponent))
        assert vec == WeightVector.of(lower, upper)


def test_published_continuation():
    vec = apply_word(initial_boundary_weights("e2"),
                     parse_word("s5 s3 s1 s2^-1 s3 s1"))
    for (index, exponent), lower, upper in CONTINUATION:
        vec = apply_generator(vec, GeneratorLetter(index, exponent))
        assert vec == WeightVector.of(lower, upper)


def test_rotation_relabels():
    vec = WeightVector.of({(4, 6): 1}, {(4, 6): 1})
    assert rotate_weights(vec, 2) == WeightVector.of({(2, 6): 1}, {(2, 6): 1})
    assert rotate_weights(vec, 6) == vec
    assert rotate_weights(rotate_weights(vec, 2), 4) == vec


def test_swap_levels():
    sym = WeightVector.of({(4, 6): 1}, {(4, 6): 1})
    assert swap_levels(sym) == sym
    one_sided = WeightVector.of({(1, 5): 4}, {})
    assert swap_levels(one_sided) == WeightVector.of({}, {(1, 5): 4})
    assert swap_levels(swap_levels(one_sided)) == one_sided


def test_apply_word_identity():
    vec = initial_boundary_weights("e1")
    assert apply_word(vec, parse_word("")) == vec


def test_word_cancellation_acts_trivially(corpus):
    rng = random.Random(3)
    for word, label, vec in corpus[:60]:
        u = parse_word("s%d^%d s%d" % (rng.randrange(6), rng.choice([1, -1]),
                                       rng.randrange(6)))
        assert apply_word(vec, compose(u, invert(u))) == vec


def test_generator_round_trip(corpus):
    rng = random.Random(4)
    for word, label, vec in corpus:
        g = GeneratorLetter(rng.randrange(6), rng.choice([1, -1]))
        assert apply_generator(apply_generator(vec, g), g.inverse()) == vec


def test_invariants_hold_on_corpus(corpus, charged_corpus):
    for _, _, vec in corpus + charged_corpus:
        vec.validate()


def test_validate_rejects_imbalance():
    with pytest.raises(MalformedCurveError):
        WeightVector.of({(1, 4): 1}, {}).validate()


def test_validate_rejects_adjacent_pair():
    with pytest.raises(MalformedCurveError):
        WeightVector.of({(4, 5): 1, (1, 2): 1},
                        {(4, 5): 1, (1, 2): 1}).validate()


def test_json_round_trip(corpus):
    for _, _, vec in corpus[:40]:
        assert WeightVector.from_json_dict(vec.to_json_dict()) == vec

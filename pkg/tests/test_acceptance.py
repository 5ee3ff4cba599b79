"""Acceptance suite: one check per shipped guarantee, one verdict line each."""

import random
import time

from tangle3 import (
    BraidWord,
    GeneratorLetter,
    WeightVector,
    apply_generator,
    apply_word,
    compose,
    decide_bounds_disk,
    equivalent,
    initial_boundary_weights,
    invert,
    normalize_to_b5,
    oracle_bounds_disk,
    parse_word,
    to_dehn,
    trace,
)

WORD_T = "s5 s3 s1 s2^-1 s3 s1"
WORD_T_MIRROR = "s5^-1 s3^-1 s1^-1 s2 s3^-1 s1^-1"

EXAMPLE1_STEPS = [
    ({(1, 4): 1, (5, 6): 1}, {(1, 6): 1, (4, 5): 1}),
    ({(1, 5): 1, (5, 6): 1, (3, 4): 1}, {(3, 5): 1, (4, 5): 1, (1, 6): 1}),
    ({(1, 4): 1, (4, 6): 1, (3, 4): 1, (5, 6): 2},
     {(3, 6): 1, (4, 6): 1, (1, 6): 1, (4, 5): 2}),
    ({(1, 4): 2, (1, 5): 2, (3, 4): 1, (5, 6): 3},
     {(1, 5): 1, (3, 5): 1, (1, 6): 3, (4, 5): 3}),
    ({(1, 5): 4, (3, 4): 3, (5, 6): 3, (3, 5): 1},
     {(1, 5): 1, (1, 6): 3, (4, 5): 3, (3, 5): 4}),
    ({(1, 5): 4, (3, 4): 3, (5, 6): 3, (3, 5): 1},
     {(1, 5): 1, (1, 6): 3, (4, 5): 3, (3, 5): 4}),
]

EXAMPLE2_STEPS = [
    ({(1, 5): 4, (3, 4): 3, (3, 5): 1, (5, 6): 3},
     {(1, 5): 1, (1, 6): 3, (3, 5): 4, (4, 5): 3}),
    ({(1, 5): 4, (3, 4): 3, (3, 5): 4, (5, 6): 3},
     {(1, 5): 1, (1, 6): 3, (3, 5): 7, (4, 5): 3}),
    ({(1, 5): 7, (3, 4): 3, (3, 5): 4, (5, 6): 3},
     {(1, 5): 4, (1, 6): 3, (3, 5): 7, (4, 5): 3}),
    ({(1, 4): 7, (3, 4): 7, (4, 6): 3, (5, 6): 14},
     {(1, 6): 7, (3, 6): 7, (4, 6): 3, (4, 5): 14}),
    ({(1, 5): 7, (3, 5): 7, (3, 4): 17, (5, 6): 17},
     {(1, 6): 7, (3, 6): 10, (3, 5): 14, (4, 5): 17}),
    ({(3, 5): 7, (3, 4): 17, (5, 6): 17, (1, 5): 24},
     {(1, 5): 7, (1, 6): 17, (4, 5): 17, (3, 5): 24}),
]


def report(criterion: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'}  {criterion}")
    assert ok, criterion


def test_criterion_1_example1_trajectory():
    t0 = time.perf_counter()
    vec = initial_boundary_weights("e2")
    ok = vec == WeightVector.of({(4, 6): 1}, {(4, 6): 1})
    letters = [(1, 1), (3, 1), (2, -1), (1, 1), (3, 1), (5, 1)]
    for (index, exponent), (lower, upper) in zip(letters, EXAMPLE1_STEPS):
        vec = apply_generator(vec, GeneratorLetter(index, exponent))
        ok = ok and vec == WeightVector.of(lower, upper)
    elapsed = time.perf_counter() - t0
    report(f"criterion 1: example-1 trajectory exact ({elapsed * 1e3:.2f} ms)",
           ok and elapsed < 0.010)


def test_criterion_2_example1_parameters_and_verdict():
    alpha = apply_word(initial_boundary_weights("e2"), parse_word(WORD_T))
    params, pants, _ = to_dehn(alpha)
    ok = params.nine_tuple == (4, 0, -1, 8, 1, -1, 4, 0, 0)
    ok = ok and pants.to_json_dict() == {"12": 8, "23": 8}
    ok = ok and not decide_bounds_disk(alpha).bounds
    from tangle3.cli import main
    ok = ok and main(["equiv", WORD_T, ""]) == 1
    report("criterion 2: example-1 parameters, verdict, exit code", ok)


def test_criterion_3_example2():
    vec = apply_word(initial_boundary_weights("e2"), parse_word(WORD_T))
    letters = [(5, 1), (3, 1), (1, 1), (2, -1), (3, 1), (1, 1)]
    ok = True
    for (index, exponent), (lower, upper) in zip(letters, EXAMPLE2_STEPS):
        vec = apply_generator(vec, GeneratorLetter(index, exponent))
        ok = ok and vec == WeightVector.of(lower, upper)
    params, pants, _ = to_dehn(vec)
    ok = ok and params.p == (24, 48, 24)
    ok = ok and pants.to_json_dict() == {"12": 48, "23": 48}
    ok = ok and not decide_bounds_disk(vec).bounds
    ok = ok and not equivalent(parse_word(WORD_T), parse_word(WORD_T_MIRROR)).isotopic
    report("criterion 3: example-2 trajectory, parameters, T vs T'", ok)


def test_criterion_4_flip_normalization():
    got = normalize_to_b5(parse_word("s5^-1 s0^-1 s4 s5^-1 s1"))
    want = parse_word(
        "s1^-1 s2^-1 s3^-1 s1^-1 s2^-1 s1^-1 s4^-1 s2 s3 s2 s4 s3 s2 s1^-1 s3"
    )
    report("criterion 4: flip rewrite matches the worked example", got == want)


def test_criterion_5_presentation_equivalence():
    ok = equivalent(parse_word("s5 s1 s0^-1 s3 s1 s5"),
                    parse_word("s1 s3 s2^-1 s1 s2^-1 s1 s2 s3")).isotopic
    report("criterion 5: equivalence across the flip presentation", ok)


def test_criterion_6_oracle_concordance():
    t0 = time.perf_counter()
    rng = random.Random(606060)
    total = agree = 0
    for _ in range(500):
        word = BraidWord.of(*[(rng.randrange(1, 5), rng.choice([1, -1]))
                              for _ in range(rng.randrange(0, 9))])
        for label in ("e1", "e2", "e3"):
            vec = apply_word(initial_boundary_weights(label), word)
            total += 1
            agree += decide_bounds_disk(vec).bounds == oracle_bounds_disk(vec)
    elapsed = time.perf_counter() - t0
    report(f"criterion 6: oracle concordance {agree}/{total} ({elapsed:.1f} s)",
           agree == total and elapsed < 60)


def test_criterion_7_invariant_suite():
    rng = random.Random(707070)
    ok = True
    for _ in range(120):
        word = BraidWord.of(*[(rng.randrange(0, 6), rng.choice([1, -1]))
                              for _ in range(rng.randrange(0, 9))])
        label = rng.choice(["e1", "e2", "e3"])
        vec = initial_boundary_weights(label)
        for letter in reversed(word.letters):
            vec = apply_generator(vec, letter)
            vec.validate()  # edge balance and adjacency exclusion
        ok = ok and len(trace(vec)) == 1
        g = GeneratorLetter(rng.randrange(0, 6), rng.choice([1, -1]))
        ok = ok and apply_generator(apply_generator(vec, g), g.inverse()) == vec
        verdict = decide_bounds_disk(vec)
        for step in verdict.steps:
            if step.rule in ("relabel", "half-turn"):
                continue
            drop = (step.before[0] + step.before[2] + step.before[4]
                    - step.after[0] - step.after[2] - step.after[4])
            ok = ok and drop > 0
    for _ in range(40):
        word = BraidWord.of(*[(rng.randrange(0, 6), rng.choice([1, -1]))
                              for _ in range(rng.randrange(0, 7))])
        bound = sum(
            decide_bounds_disk(apply_word(initial_boundary_weights(lab), word)).bounds
            for lab in ("e1", "e2", "e3"))
        ok = ok and bound != 2
    report("criterion 7: invariants (balance, round trips, descent, 2-of-3)", ok)


def test_criterion_8_trivial_gates():
    rng = random.Random(808080)
    ok = True
    for _ in range(100):
        word = BraidWord.of(*[(rng.randrange(0, 6), rng.choice([1, -1]))
                              for _ in range(rng.randrange(0, 7))])
        ok = ok and equivalent(word, word).isotopic
    for label in ("e1", "e2", "e3"):
        verdict = decide_bounds_disk(initial_boundary_weights(label))
        ok = ok and verdict.bounds and verdict.label == label
    report("criterion 8: reflexivity and labeled boundary parallels", ok)

"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Run with `pytest tests/test_acceptance.py -v` for one pass/fail line per
criterion (each test also prints its own PASS line, visible with -s).
"""

import random
import time

from tangletrick.braid import braid_to_psl2, delta, delta_squared, positivize
from tangletrick.cli import main
from tangletrick.projrat import ZERO, make, neg_recip
from tangletrick.psl2 import IDENTITY, moebius, mul, stab0_data, word_to_psl2
from tangletrick.solver import shortest_untangle, untangle_moves
from tangletrick.tangle import apply_letter, invariant_of_word
from tangletrick.words import (
    BRAID_ALPHABET,
    MOVE_ALPHABET,
    braid_to_moves,
    parse_braid,
    parse_moves,
)

# The worked 146/57 untangling: 17 displayed values after the start, with
# the moves grouped into T-runs.
EXAMPLE_START = "146/57"
EXAMPLE_DISPLAY_VALUES = [
    "-57/146", "89/146", "-146/89", "-57/89", "32/89", "-89/32", "-57/32",
    "-25/32", "7/32", "-32/7", "3/7", "-7/3", "2/3", "-3/2", "1/2", "-2", "0",
]
EXAMPLE_GROUPED_MOVES = "R T R T^2 R T^3 R T^5 R T^3 R T^2 R T^2"
EXAMPLE_WORD = "RTRTTRTTTRTTTTTRTTTRTTRTT"


def random_word(rng, alphabet, max_len):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def random_fraction(rng):
    return make(rng.randint(-999, 999), rng.randint(-999, 999) or 1)


def test_example1_reproduction(capsys):
    started = time.perf_counter()
    assert main(["steps", EXAMPLE_START]) == 0
    lines = capsys.readouterr().out.strip().splitlines()

    assert lines[0] == EXAMPLE_START
    chain = [tuple(part.strip() for part in line.split("->")) for line in lines[1:-2]]
    values = [value for _, value in chain]
    # every displayed value of the worked example appears, in order, and the
    # values between them are forced: each is the previous plus one
    positions = []
    cursor = 0
    for wanted in EXAMPLE_DISPLAY_VALUES:
        cursor = values.index(wanted, cursor)
        positions.append(cursor)
    assert positions[-1] == len(values) - 1
    letters = "".join(m for m, _ in chain)
    assert letters == EXAMPLE_WORD
    assert lines[-2] == f"moves: {EXAMPLE_GROUPED_MOVES}"
    assert lines[-1] == f"word: {EXAMPLE_WORD}"
    # exact rational equality of the full 25-value chain against a fold
    x = make(146, 57)
    for m, value in chain:
        x = apply_letter(x, m)
        assert str(x) == value
    assert x == ZERO

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"PASS example1-reproduction ({elapsed:.3f}s)")


def test_round_trip_untangling():
    started = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(10_000):
        w = random_word(rng, ("T", "R"), 200)
        x = invariant_of_word(w)
        assert invariant_of_word(w + untangle_moves(x)) == ZERO
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    print(f"PASS round-trip-untangling ({elapsed:.2f}s for 10000 words)")


def test_group_action_law():
    rng = random.Random(2025)
    for _ in range(1000):
        A = word_to_psl2(random_word(rng, MOVE_ALPHABET, 40))
        B = word_to_psl2(random_word(rng, MOVE_ALPHABET, 40))
        x = random_fraction(rng)
        assert moebius(mul(A, B), x) == moebius(A, moebius(B, x))
    print("PASS group-action-law (1000 triples)")


def test_presentation_relations():
    rr = word_to_psl2(parse_moves("RR"))
    trtrtr = word_to_psl2(parse_moves("TRTRTR"))
    assert rr == IDENTITY
    assert trtrtr == IDENTITY
    rng = random.Random(2026)
    for _ in range(100):
        x = random_fraction(rng)
        assert moebius(rr, x) == x
        assert moebius(trtrtr, x) == x
    print("PASS presentation-relations")


def test_braid_bridge():
    assert braid_to_psl2(parse_braid("aba")) == braid_to_psl2(parse_braid("bab"))
    assert braid_to_psl2(delta_squared()) == IDENTITY
    delta_mat = braid_to_psl2(delta())
    rng = random.Random(2027)
    for _ in range(100):
        x = random_fraction(rng)
        assert moebius(delta_mat, x) == neg_recip(x)
    for _ in range(1000):
        b = random_word(rng, BRAID_ALPHABET, 40)
        assert braid_to_psl2(b) == word_to_psl2(braid_to_moves(b))
    print("PASS braid-bridge")


def test_positivization():
    assert positivize(("A",)) == ("b", "a", "a", "b", "a")
    assert positivize(("B",)) == ("a", "b", "b", "a", "b")
    rng = random.Random(2028)
    for _ in range(1000):
        b = random_word(rng, BRAID_ALPHABET, 60)
        pos = positivize(b)
        inverses = sum(1 for letter in b if letter.isupper())
        assert all(letter.islower() for letter in pos)
        assert len(pos) == len(b) + 4 * inverses
        assert braid_to_psl2(pos) == braid_to_psl2(b)
    print("PASS positivization (1000 words)")


def test_oracle_agreement():
    for p in range(-7, 8):
        for q in range(1, 8):
            x = make(p, q)
            best = shortest_untangle(x, 20)
            assert best is not None, f"BFS failed for {x}"
            value = x
            for m in best:
                value = apply_letter(value, m)
            assert value == ZERO
            euclid = untangle_moves(x)
            value = x
            for m in euclid:
                value = apply_letter(value, m)
            assert value == ZERO
            assert len(euclid) >= len(best)
    print("PASS oracle-agreement (|p|, q <= 7)")


def test_stabilizer_characterization():
    rng = random.Random(2029)
    for _ in range(1000):
        A = word_to_psl2(random_word(rng, MOVE_ALPHABET, 40))
        present = stab0_data(A) is not None
        fixes_zero = moebius(A, ZERO) == ZERO
        assert present == fixes_zero == (A.b == 0)
    k = stab0_data(word_to_psl2(parse_moves("TRT")))
    assert moebius(word_to_psl2(parse_moves("TRT")), ZERO) == ZERO
    assert k is not None and abs(k) == 1
    print("PASS stabilizer-characterization (1000 elements)")

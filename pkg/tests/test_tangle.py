import random
from fractions import Fraction

import pytest

from tangletrick.projrat import INF, ZERO, make
from tangletrick.psl2 import moebius, word_to_psl2
from tangletrick.solver import untangle_moves
from tangletrick.tangle import (
    TangleState,
    apply_letter,
    apply_move,
    invariant_of_word,
    new_untangle,
    state_from_json,
    state_to_json,
)
from tangletrick.words import MOVE_ALPHABET, invert_word, parse_moves


def fold_fraction(word):
    """Independent fold over stdlib Fraction with a manual infinity flag."""
    x, at_inf = Fraction(0), False
    for m in word:
        if m == "T":
            x = x if at_inf else x + 1
        elif m == "T'":
            x = x if at_inf else x - 1
        elif m in ("R", "R'"):
            if at_inf:
                x, at_inf = Fraction(0), False
            elif x == 0:
                at_inf = True
            else:
                x = -1 / x
        else:
            raise AssertionError(m)
    return x, at_inf


def test_new_untangle():
    state = new_untangle()
    assert state.invariant == ZERO
    assert state.history == ()
    assert apply_move(state, "T").invariant == make(1)
    assert apply_move(state, "R").invariant == INF


def test_apply_move_examples():
    state = TangleState(make(146, 57), ())
    assert apply_move(state, "R").invariant == make(-57, 146)

    state = TangleState(make(-89, 32), ())
    for _ in range(3):
        state = apply_move(state, "T")
    assert state.invariant == make(7, 32)
    assert state.history == ("T", "T", "T")

    assert apply_move(TangleState(INF, ()), "T").invariant == INF


def test_apply_letter_rejects_garbage():
    with pytest.raises(ValueError):
        apply_letter(ZERO, "X")


def test_invariant_of_word_examples():
    assert invariant_of_word(()) == ZERO
    assert invariant_of_word(parse_moves("TTRT")) == make(1, 2)


def test_example_solution_word_closes_the_loop():
    # A word whose invariant is 146/57, extended by the published solution,
    # must land exactly on 0.
    solution = parse_moves("RTRT TRTTT RT^5RT^3RT^2RT^2")
    prefix = invert_word(untangle_moves(make(146, 57)))
    assert invariant_of_word(prefix) == make(146, 57)
    assert invariant_of_word(prefix + solution) == ZERO


def test_fold_matches_fraction_oracle():
    rng = random.Random(30)
    for _ in range(300):
        w = tuple(rng.choice(MOVE_ALPHABET) for _ in range(rng.randint(0, 60)))
        x = invariant_of_word(w)
        f, at_inf = fold_fraction(w)
        if at_inf:
            assert x == INF
        else:
            assert (x.num, x.den) == (f.numerator, f.denominator)


def test_bridge_identity_after_every_move():
    rng = random.Random(31)
    for _ in range(100):
        state = new_untangle()
        for _ in range(rng.randint(0, 40)):
            state = apply_move(state, rng.choice(MOVE_ALPHABET))
            assert state.invariant == moebius(word_to_psl2(state.history), ZERO)


def test_r_is_an_involution_on_invariants():
    rng = random.Random(32)
    for _ in range(200):
        x = make(rng.randint(-99, 99), rng.randint(-99, 99) or 1)
        assert apply_letter(apply_letter(x, "R"), "R") == x
        assert apply_letter(x, "R'") == apply_letter(x, "R")


def test_tr_cubed_acts_trivially():
    rng = random.Random(33)
    values = [ZERO, INF] + [
        make(rng.randint(-99, 99), rng.randint(-99, 99) or 1) for _ in range(200)
    ]
    for x in values:
        y = x
        for m in ("R", "T", "R", "T", "R", "T"):
            y = apply_letter(y, m)
        assert y == x


def test_state_json_round_trip():
    state = new_untangle()
    for m in parse_moves("TTR"):
        state = apply_move(state, m)
    data = state_to_json(state)
    assert data == {"invariant": "-1/2", "history": "TTR"}
    assert state_from_json(data) == state

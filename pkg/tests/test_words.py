import random

import pytest

from tangletrick.braid import braid_to_psl2
from tangletrick.psl2 import word_to_psl2
from tangletrick.words import (
    BRAID_ALPHABET,
    MOVE_ALPHABET,
    braid_to_moves,
    format_braid,
    format_grouped,
    format_moves,
    free_reduce,
    invert_word,
    moves_to_braid,
    parse_braid,
    parse_moves,
)


def test_parse_moves_examples():
    assert parse_moves("RTRT") == ("R", "T", "R", "T")
    assert parse_moves("T^5 R") == ("T",) * 5 + ("R",)
    assert parse_moves("T' R'") == ("T'", "R'")


def test_parse_moves_is_case_insensitive_and_skips_whitespace():
    assert parse_moves(" r t\tR\nT ") == ("R", "T", "R", "T")
    assert parse_moves("t'^3") == ("T'",) * 3


def test_parse_moves_errors():
    with pytest.raises(ValueError):
        parse_moves("RTX")
    with pytest.raises(ValueError):
        parse_moves("T^")
    with pytest.raises(ValueError):
        parse_moves("T^0")
    with pytest.raises(ValueError):
        parse_moves("^2")


def test_parse_braid_examples():
    assert parse_braid("abAB") == ("a", "b", "A", "B")
    assert parse_braid("a^3 B") == ("a", "a", "a", "B")
    with pytest.raises(ValueError):
        parse_braid("c")
    with pytest.raises(ValueError):
        parse_braid("a'")
    with pytest.raises(ValueError):
        parse_braid("b^")


def test_format_parse_round_trip():
    rng = random.Random(10)
    for _ in range(200):
        w = tuple(rng.choice(MOVE_ALPHABET) for _ in range(rng.randint(0, 30)))
        assert parse_moves(format_moves(w)) == w
        b = tuple(rng.choice(BRAID_ALPHABET) for _ in range(rng.randint(0, 30)))
        assert parse_braid(format_braid(b)) == b
    assert format_moves(parse_moves("RTRTT")) == "RTRTT"
    assert format_braid(parse_braid("abAB")) == "abAB"


def test_format_grouped():
    assert format_grouped(parse_moves("RTRTT")) == "R T R T^2"
    assert format_grouped(()) == ""
    assert format_grouped(("T",) * 5) == "T^5"


def test_free_reduce_examples():
    assert free_reduce(("T", "T'")) == ()
    assert free_reduce(("R", "T", "T'", "R")) == ("R", "R")
    assert free_reduce(("a", "b", "B", "A")) == ()


def test_free_reduce_is_idempotent_and_shrinking():
    rng = random.Random(11)
    for _ in range(300):
        w = tuple(rng.choice(MOVE_ALPHABET) for _ in range(rng.randint(0, 60)))
        reduced = free_reduce(w)
        assert len(reduced) <= len(w)
        assert free_reduce(reduced) == reduced
        # no adjacent letter/inverse pair survives
        for left, right in zip(reduced, reduced[1:]):
            assert invert_word((left,)) != (right,)


def test_invert_word_cancels():
    rng = random.Random(12)
    for _ in range(200):
        w = tuple(rng.choice(MOVE_ALPHABET) for _ in range(rng.randint(0, 40)))
        assert free_reduce(w + invert_word(w)) == ()


def test_braid_to_moves_examples():
    assert braid_to_moves(("a",)) == ("T",)
    assert braid_to_moves(("b",)) == ("R", "T", "R")
    assert braid_to_moves(("B",)) == ("R'", "T'", "R'")


def test_moves_to_braid_examples():
    assert moves_to_braid(("T",)) == ("a",)
    assert moves_to_braid(("R",)) == ("a", "b", "a")
    assert moves_to_braid(()) == ()


def test_translations_agree_at_the_matrix_level():
    rng = random.Random(13)
    for _ in range(300):
        b = tuple(rng.choice(BRAID_ALPHABET) for _ in range(rng.randint(0, 40)))
        assert braid_to_psl2(b) == word_to_psl2(braid_to_moves(b))
        w = tuple(rng.choice(MOVE_ALPHABET) for _ in range(rng.randint(0, 40)))
        assert word_to_psl2(w) == braid_to_psl2(moves_to_braid(w))

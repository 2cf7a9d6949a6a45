"""Move words and braid words: parsing, formatting, free reduction, and the
letterwise translations between the two alphabets.

A move word is a temporal sequence over T, R and their formal inverses
(written T', R'); a braid word is a temporal sequence over the two
generators of the three-strand braid group, written a, b with inverses
A, B.  Temporal order means the first letter is the first move performed.
Translations are plain letterwise substitutions and never reduce, so a
word stays a faithful move-by-move record of a performance; callers reduce
explicitly with free_reduce when they want the normal form.
"""

from __future__ import annotations

MOVE_ALPHABET = ("T", "R", "T'", "R'")
BRAID_ALPHABET = ("a", "b", "A", "B")

MoveWord = tuple[str, ...]
BraidWord = tuple[str, ...]

_INVERSE = {
    "T": "T'", "T'": "T", "R": "R'", "R'": "R",
    "a": "A", "A": "a", "b": "B", "B": "b",
}

# The two strand crossings act as a Twist and as a conjugated Twist; the
# quarter turn is the image of the three-letter half twist.
_BRAID_TO_MOVES = {
    "a": ("T",),
    "b": ("R", "T", "R"),
    "A": ("T'",),
    "B": ("R'", "T'", "R'"),
}
_MOVES_TO_BRAID = {
    "T": ("a",),
    "R": ("a", "b", "a"),
    "T'": ("A",),
    "R'": ("A", "B", "A"),
}


def inverse_letter(letter: str) -> str:
    return _INVERSE[letter]


def invert_word(word: MoveWord | BraidWord) -> MoveWord | BraidWord:
    """The group inverse: reversed sequence of inverted letters."""
    return tuple(_INVERSE[letter] for letter in reversed(word))


def free_reduce(word: MoveWord | BraidWord) -> MoveWord | BraidWord:
    """Cancel adjacent letter/inverse pairs until none remain.

    The stack scan yields the unique reduced word regardless of the order
    cancellations are discovered in."""
    out: list[str] = []
    for letter in word:
        if out and out[-1] == _INVERSE[letter]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _scan_exponent(s: str, i: int) -> tuple[int, int]:
    """Parse an optional "^n" at position i; returns (count, next index)."""
    if i < len(s) and s[i] == "^":
        j = i + 1
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i + 1:
            raise ValueError(f"malformed exponent at position {i} in {s!r}")
        count = int(s[i + 1:j])
        if count < 1:
            raise ValueError(f"exponent must be at least 1 at position {i} in {s!r}")
        return count, j
    return 1, i


def parse_moves(s: str) -> MoveWord:
    """Parse move text: letters T/R (case-insensitive), an optional
    apostrophe for the inverse, an optional "^n" repetition (n >= 1),
    whitespace ignored.  "T^5 R" means five Twists then a tuRn."""
    out: list[str] = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        letter = ch.upper()
        if letter not in ("T", "R"):
            raise ValueError(f"unknown move symbol {ch!r} at position {i} in {s!r}")
        i += 1
        if i < n and s[i] == "'":
            letter += "'"
            i += 1
        count, i = _scan_exponent(s, i)
        out.extend([letter] * count)
    return tuple(out)


def parse_braid(s: str) -> BraidWord:
    """Parse braid text: "a" and "b" are the two generators, uppercase "A"
    and "B" their inverses, with the same "^n" rule as moves."""
    out: list[str] = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in BRAID_ALPHABET:
            raise ValueError(f"unknown braid symbol {ch!r} at position {i} in {s!r}")
        i += 1
        count, i = _scan_exponent(s, i)
        out.extend([ch] * count)
    return tuple(out)


def format_moves(w: MoveWord) -> str:
    """Canonical move text: letters concatenated, no separators or exponents."""
    return "".join(w)


def format_braid(b: BraidWord) -> str:
    """Canonical braid text, e.g. "abAB"."""
    return "".join(b)


def grouped_moves(w: MoveWord) -> tuple[tuple[str, int], ...]:
    """Run-length pairs (letter, count) over a word, for compact display."""
    groups: list[tuple[str, int]] = []
    for letter in w:
        if groups and groups[-1][0] == letter:
            groups[-1] = (letter, groups[-1][1] + 1)
        else:
            groups.append((letter, 1))
    return tuple(groups)


def format_grouped(w: MoveWord) -> str:
    """Display form with repeated letters collapsed, e.g. "R T R T^2"."""
    return " ".join(
        letter if count == 1 else f"{letter}^{count}"
        for letter, count in grouped_moves(w)
    )


def braid_to_moves(b: BraidWord) -> MoveWord:
    """Letterwise substitution a ↦ T, b ↦ RTR; an inverse letter maps to
    the reversed inverses of its image."""
    return tuple(m for letter in b for m in _BRAID_TO_MOVES[letter])


def moves_to_braid(w: MoveWord) -> BraidWord:
    """Letterwise substitution T ↦ a, R ↦ aba; inverses as in braid_to_moves."""
    return tuple(g for letter in w for g in _MOVES_TO_BRAID[letter])

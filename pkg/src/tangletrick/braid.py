"""Three-strand braid words: matrix images, the fundamental element, center
detection, and removal of inverse letters.

The two generators map to the matrices (1 1; 0 1) and (1 0; -1 1); the
kernel of this map is exactly the center of the braid group, generated by
the square of the fundamental half twist Δ = aba (= bab).  Because Δ² is
central, maps to the identity matrix, and times any inverse generator is
a positive word, every inverse letter can be traded for a five-letter
positive word without changing the matrix image.  Doing this letterwise
is what lets the magician untangle while apparently only tangling further.
"""

from __future__ import annotations

from .psl2 import IDENTITY, Psl2Elem, inverse, mul, psl2
from .words import BraidWord, MoveWord, braid_to_moves, moves_to_braid

_SIGMA1 = psl2(1, 1, 0, 1)
_SIGMA2 = psl2(1, 0, -1, 1)

_GEN_MATRIX = {
    "a": _SIGMA1,
    "b": _SIGMA2,
    "A": inverse(_SIGMA1),
    "B": inverse(_SIGMA2),
}

# inverse · Δ² spelled out as a positive word: A·(aba)² reduces to baaba,
# and B·(bab)² to abbab.
_POSITIVIZE = {
    "a": ("a",),
    "b": ("b",),
    "A": ("b", "a", "a", "b", "a"),
    "B": ("a", "b", "b", "a", "b"),
}


def braid_to_psl2(b: BraidWord) -> Psl2Elem:
    """Matrix image of a temporal braid word, composed right to left so the
    first letter acts first (the same convention as word_to_psl2)."""
    acc = IDENTITY
    for letter in b:
        acc = mul(_GEN_MATRIX[letter], acc)
    return acc


def delta() -> BraidWord:
    """The fundamental half twist aba; its action on invariants is x ↦ -1/x."""
    return ("a", "b", "a")


def delta_squared() -> BraidWord:
    """The six-letter generator of the center; maps to the identity matrix."""
    return delta() + delta()


def exponent_sum(b: BraidWord) -> int:
    """Positive letters minus inverse letters (the abelianization)."""
    return sum(1 if letter.islower() else -1 for letter in b)


def central_power(b: BraidWord) -> int | None:
    """The k with b = Δ^2k when b is central, else None.

    The kernel of the matrix map is exactly the center, so b is central
    iff its image is the identity; the exponent sum is then 6k.  An
    identity image with exponent sum not divisible by six cannot come
    from a braid word and signals a bug, so it raises."""
    if braid_to_psl2(b) != IDENTITY:
        return None
    e = exponent_sum(b)
    if e % 6 != 0:
        raise ValueError(f"identity image with exponent sum {e}: not a braid word")
    return e // 6


def positivize(b: BraidWord) -> BraidWord:
    """Trade every inverse letter for its positive five-letter equivalent
    modulo the central element Δ².

    The output is inverse-free, four letters longer per inverse replaced,
    and has the same matrix image as the input.  No shortening is
    attempted; minimal positive representatives are a different problem."""
    return tuple(out for letter in b for out in _POSITIVIZE[letter])


def positivize_moves(w: MoveWord) -> MoveWord:
    """A positive move word with the same matrix image as w.

    R' acts like R on invariants, so it is replaced by R up front; the
    rest goes through the braid alphabet, is positivized there, and is
    read back as moves."""
    swapped = tuple("R" if m == "R'" else m for m in w)
    return braid_to_moves(positivize(moves_to_braid(swapped)))

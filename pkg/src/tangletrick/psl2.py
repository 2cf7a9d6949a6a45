"""Exact elements of the modular group and their Möbius action on the
projective rationals.

An element is a 2×2 integer matrix of determinant one, taken up to global
sign.  We store the representative whose first nonzero entry in the order
(a, b, c, d) is positive, so equality of group elements is plain field
comparison.  The Möbius action is

    (a b; c d) · (p/q) = (a p + b q) / (c p + d q),

which applied to canonical pairs encodes all the infinity conventions at
once: inf maps to a/c, and a vanishing denominator yields inf.  The pair
on the right is never (0, 0) because the matrix is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .projrat import ProjRat, make
from .words import MoveWord


@dataclass(frozen=True, slots=True)
class Psl2Elem:
    """Canonical-sign determinant-one integer matrix; build via psl2()."""

    a: int
    b: int
    c: int
    d: int

    def __str__(self) -> str:
        return format_psl2(self)


def psl2(a: int, b: int, c: int, d: int) -> Psl2Elem:
    """The group element of the matrix (a b; c d), sign-normalized.

    Raises if the determinant is not one, since such a matrix is not an
    element of the group."""
    if a * d - b * c != 1:
        raise ValueError(f"determinant must be 1, got {a * d - b * c}")
    for entry in (a, b, c, d):
        if entry != 0:
            if entry < 0:
                a, b, c, d = -a, -b, -c, -d
            break
    return Psl2Elem(a, b, c, d)


IDENTITY = psl2(1, 0, 0, 1)
_T = psl2(1, 1, 0, 1)
_R = psl2(0, -1, 1, 0)


def gen_t() -> Psl2Elem:
    """The generator acting as x ↦ x + 1."""
    return _T


def gen_r() -> Psl2Elem:
    """The generator acting as x ↦ -1/x; squares to the identity."""
    return _R


def mul(A: Psl2Elem, B: Psl2Elem) -> Psl2Elem:
    return psl2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def inverse(A: Psl2Elem) -> Psl2Elem:
    """For determinant one the inverse is the adjugate (d -b; -c a)."""
    return psl2(A.d, -A.b, -A.c, A.a)


def moebius(A: Psl2Elem, x: ProjRat) -> ProjRat:
    """Apply the Möbius action of A to x."""
    return make(A.a * x.num + A.b * x.den, A.c * x.num + A.d * x.den)


_LETTER_MATRIX = {
    "T": _T,
    "R": _R,
    "T'": inverse(_T),
    "R'": inverse(_R),
}


def word_to_psl2(w: MoveWord) -> Psl2Elem:
    """Matrix image of a temporal move word.

    The first letter of the word is the first move performed, so the
    product is composed right to left: the image of m1 m2 ... mn is
    φ(mn)···φ(m1), and moebius(word_to_psl2(w), x) applies the moves to x
    in performance order.  Inverse letters map to inverse matrices."""
    acc = IDENTITY
    for letter in w:
        acc = mul(_LETTER_MATRIX[letter], acc)
    return acc


def stab0_data(A: Psl2Elem) -> int | None:
    """If A fixes 0, return the integer k with A = (1 0; k 1); else None.

    A · 0 = b/d, so fixing 0 forces b = 0; the determinant then makes
    a = d = ±1 and the canonical sign pins a = d = 1, leaving only the
    lower-left entry free.  These k form the full stabilizer of 0."""
    if A.b != 0:
        return None
    return A.c


def format_psl2(A: Psl2Elem) -> str:
    """Canonical matrix text, e.g. "[[1,1],[0,1]]"."""
    return f"[[{A.a},{A.b}],[{A.c},{A.d}]]"

"""Exact arithmetic on the projective rationals (the rationals plus a point
at infinity).

The tangle invariant lives here: a Twist adds one, a tuRn sends x to -1/x,
and the point at infinity obeys -1/0 = inf, -1/inf = 0 and inf + 1 = inf.
Infinity is a first-class value of the type, not an error; with the three
conventions above there are no partial cases left.

Numerators and denominators are plain Python ints.  Iterated moves grow
them like continued-fraction convergents (exponentially in the number of
moves), so fixed-width arithmetic would overflow on words of length around
ninety; arbitrary precision is not optional here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ProjRat:
    """A point of Q ∪ {inf} in canonical form.

    Canonical form means gcd(|num|, den) == 1 with the sign carried by num
    and den >= 0; infinity is stored as 1/0 and zero as 0/1, and 0/0 never
    occurs.  Build values through make(), which normalizes any integer
    pair; the arithmetic below preserves canonical form by construction.
    """

    num: int
    den: int

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def __str__(self) -> str:
        return format_projrat(self)


ZERO = ProjRat(0, 1)
INF = ProjRat(1, 0)


def make(p: int, q: int = 1) -> ProjRat:
    """Return p/q in lowest terms; q may be negative (sign moves to p) or
    zero (p/0 is infinity).  Rejects 0/0, which is not a projective point."""
    if q == 0:
        if p == 0:
            raise ValueError("0/0 is not a point of Q ∪ {inf}")
        return INF
    if p == 0:
        return ZERO
    if q < 0:
        p, q = -p, -q
    g = math.gcd(p, q)
    return ProjRat(p // g, q // g)


def add_int(x: ProjRat, k: int) -> ProjRat:
    """x + k, with inf + k = inf.

    gcd(num + k*den, den) = gcd(num, den), so no re-reduction is needed."""
    if x.den == 0:
        return x
    return ProjRat(x.num + k * x.den, x.den)


def neg_recip(x: ProjRat) -> ProjRat:
    """-1/x, with -1/0 = inf and -1/inf = 0.

    Swapping numerator and denominator keeps the pair coprime, so only the
    sign needs fixing."""
    if x.num > 0:
        return ProjRat(-x.den, x.num)
    if x.num < 0:
        return ProjRat(x.den, -x.num)
    return INF


def format_projrat(x: ProjRat) -> str:
    """Canonical text: "p/q", plain "p" for integers, "inf" for infinity."""
    if x.den == 0:
        return "inf"
    if x.den == 1:
        return str(x.num)
    return f"{x.num}/{x.den}"


def parse_projrat(s: str) -> ProjRat:
    """Parse "p", "p/q", "inf" or "-inf".

    Infinity is unsigned in Q ∪ {inf}, so "-inf" normalizes to "inf"."""
    text = s.strip()
    if text.lower() in ("inf", "-inf"):
        return INF
    head, sep, tail = text.partition("/")
    try:
        p = int(head)
        q = int(tail) if sep else 1
    except ValueError:
        raise ValueError(f"not a fraction: {s!r}") from None
    return make(p, q)

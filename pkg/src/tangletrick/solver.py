"""Untangling: drive any invariant back to zero using positive moves only.

The method reduces the denominator with blocks of the form "R then T^k":
a nonnegative value is flipped negative by R, after which the least number
of T's lands back in [0, 1).  The T counts are the partial quotients of a
continued-fraction expansion, so this is the Euclidean algorithm in move
form, and it terminates because every block strictly shrinks the
denominator.

A breadth-first search over invariant values is provided as an independent
check: it finds genuinely shortest positive solutions (within a depth
bound), giving both a validity oracle and a length yardstick for the
Euclidean words, which make no minimality claim.
"""

from __future__ import annotations

from collections import deque

from .projrat import ProjRat, ZERO, add_int, neg_recip
from .tangle import apply_letter
from .words import MoveWord


def untangle_moves(x: ProjRat) -> MoveWord:
    """A positive word over {T, R} whose fold takes x to exactly 0.

    While x is nonzero: if x is nonnegative or infinite, emit R (even for
    positive integers, a positive value can only be resolved by flipping
    it negative first); otherwise emit the least number of T's that makes
    the value nonnegative, which lands in [0, 1) for non-integers and at 0
    for integers."""
    letters: list[str] = []
    while x != ZERO:
        if x.den == 0 or x.num >= 0:
            letters.append("R")
            x = neg_recip(x)
        else:
            k = (-x.num + x.den - 1) // x.den  # least k >= 1 with x + k >= 0
            letters.extend(["T"] * k)
            x = add_int(x, k)
    return tuple(letters)


def solution_chain(x: ProjRat) -> tuple[tuple[str, ProjRat], ...]:
    """The per-move trace of untangle_moves: (letter, value after it)."""
    chain: list[tuple[str, ProjRat]] = []
    for m in untangle_moves(x):
        x = apply_letter(x, m)
        chain.append((m, x))
    return tuple(chain)


def shortest_untangle(x: ProjRat, max_len: int) -> MoveWord | None:
    """A shortest positive word reaching 0 from x within max_len moves, or
    None if there is none that short.

    Breadth-first search over invariant values under the two positive
    moves, deduplicating states by value; the reachable set within any
    finite depth is finite, and the first path to reach 0 is shortest."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if x == ZERO:
        return ()
    parent: dict[ProjRat, tuple[ProjRat, str]] = {}
    seen = {x}
    frontier: deque[tuple[ProjRat, int]] = deque([(x, 0)])
    while frontier:
        value, depth = frontier.popleft()
        if depth == max_len:
            continue
        for m in ("T", "R"):
            nxt = apply_letter(value, m)
            if nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = (value, m)
            if nxt == ZERO:
                letters: list[str] = []
                cur = nxt
                while cur != x:
                    cur, letter = parent[cur]
                    letters.append(letter)
                return tuple(reversed(letters))
            frontier.append((nxt, depth + 1))
    return None

"""Tangle state: the exact invariant together with the move history that
produced it.

The ground truth for a state is its move sequence; the invariant is the
fold of the two move rules over that sequence starting from 0.  By
construction this always equals the Möbius action of the word's matrix
image on 0 (the bridge identity), which the tests exercise after every
operation.  No diagrams are represented anywhere: a state is a record of
moves plus the number they produce.
"""

from __future__ import annotations

from dataclasses import dataclass

from .projrat import ProjRat, ZERO, add_int, format_projrat, neg_recip, parse_projrat
from .words import MoveWord, format_moves, parse_moves


@dataclass(frozen=True, slots=True)
class TangleState:
    invariant: ProjRat
    history: MoveWord


def new_untangle() -> TangleState:
    """The initial uncrossed configuration: invariant 0, no history."""
    return TangleState(ZERO, ())


def apply_letter(x: ProjRat, m: str) -> ProjRat:
    """One move acting on an invariant.

    T adds one and T' subtracts one; R sends x to -1/x.  R' acts exactly
    like R: the R matrix squares to the identity, so on invariants a turn
    in either direction is the same move (the physical clockwise versus
    counterclockwise distinction is not modeled)."""
    if m == "T":
        return add_int(x, 1)
    if m == "T'":
        return add_int(x, -1)
    if m == "R" or m == "R'":
        return neg_recip(x)
    raise ValueError(f"not a move letter: {m!r}")


def apply_move(state: TangleState, m: str) -> TangleState:
    """Apply one move and extend the history."""
    return TangleState(apply_letter(state.invariant, m), state.history + (m,))


def invariant_of_word(w: MoveWord) -> ProjRat:
    """Fold the moves of w over the untangle; equals word_to_psl2(w) · 0."""
    x = ZERO
    for m in w:
        x = apply_letter(x, m)
    return x


def state_to_json(state: TangleState) -> dict:
    return {
        "invariant": format_projrat(state.invariant),
        "history": format_moves(state.history),
    }


def state_from_json(data: dict) -> TangleState:
    return TangleState(parse_projrat(data["invariant"]), parse_moves(data["history"]))

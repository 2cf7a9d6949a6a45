"""Tracking the tangle invariant, move by move.

Two ropes start uncrossed with invariant 0.  A Twist (T) adds one, a
tuRn (R) sends x to -1/x, and infinity is a perfectly ordinary value:
-1/0 = inf, -1/inf = 0, inf + 1 = inf.
"""

from tangletrick import format_projrat, invariant_of_word, new_untangle, apply_move, parse_moves

# Fold a whole word at once.
word = parse_moves("TTRT")
print(f"invariant of TTRT = {format_projrat(invariant_of_word(word))}")

# Or watch it evolve move by move.
state = new_untangle()
print(f"\nstart: {state.invariant}")
for move in parse_moves("T T R T T T R"):
    state = apply_move(state, move)
    print(f"  {move} -> {state.invariant}")

# Infinity shows up whenever R is applied at 0, and leaves again on the
# next R.
state = new_untangle()
print("\nstart again: 0")
for move in parse_moves("R T T R"):
    state = apply_move(state, move)
    print(f"  {move} -> {state.invariant}")

# The invariant only depends on the move sequence; exponent notation and
# whitespace are display conveniences.
assert invariant_of_word(parse_moves("T^3 R")) == invariant_of_word(parse_moves("TTTR"))
print("\nT^3 R and TTTR agree, as they must")

"""A complete scripted performance, from first Twist to the big reveal.

The session state machine tracks one trick: the caller tangles, the
assistant silently follows the invariant and reveals it, the magician
calls positive moves until it returns to zero.  Everything here also
runs over HTTP (`tangletrick serve`) for the companion web page.
"""

from tangletrick import (
    Phase,
    caller_move,
    create_session,
    format_projrat,
    hint,
    magician_move,
    make,
    random_caller_word,
    replay_invariant,
    reveal,
    session_from_invariant,
    snapshot,
)

s = create_session(seed=7)
print(f"session {s.id}\n")

print("caller tangles:")
for move in random_caller_word(seed=7, length=10):
    s = caller_move(s, move)
    print(f"  {move}  ->  {format_projrat(s.state.invariant)}   (assistant's private tally)")

s, revealed = reveal(s)
print(f"\nassistant reveals: {format_projrat(revealed)}")

print("\nmagician untangles by hints:")
while s.phase is not Phase.SOLVED:
    move = hint(s)
    s = magician_move(s, move)
    print(f"  {move}  ->  {format_projrat(s.state.invariant)}")

print(f"\nphase: {s.phase.value}; replay audit agrees: "
      f"{replay_invariant(s) == s.state.invariant}")

# What each participant is allowed to see mid-performance differs:
mid = create_session(seed=1)
for move in "TTRT":
    mid = caller_move(mid, move)
print(f"\nassistant view mid-trick: invariant {snapshot(mid, 'assistant')['invariant']}")
print(f"audience view mid-trick:  invariant {snapshot(mid, 'audience')['invariant']}")

# The on-stage variant: the props arrive already tangled with a known
# fraction, and the audience steers from there.
variant = session_from_invariant(make(3, 5), seed=0)
variant, revealed = reveal(variant)
print(f"\npre-built tangle at {format_projrat(revealed)}; "
      f"hint sequence: ", end="")
moves = []
while variant.phase is not Phase.SOLVED:
    move = hint(variant)
    variant = magician_move(variant, move)
    moves.append(move)
print("".join(moves))

"""The magician's method on the fraction 146/57.

Given any invariant, a sequence of blocks "R then T^k" drives it back to
zero: R flips a nonnegative value below zero, then the least number of
T's lands in [0, 1) with a strictly smaller denominator.  The T counts
are the partial quotients of a continued fraction, i.e. this is the
Euclidean algorithm performed with two ropes.
"""

from tangletrick import (
    format_grouped,
    format_moves,
    make,
    shortest_untangle,
    solution_chain,
    untangle_moves,
)

x = make(146, 57)
word = untangle_moves(x)
print(f"start:  {x}")
print(f"moves:  {format_grouped(word)}")
print(f"word:   {format_moves(word)}  ({len(word)} letters)\n")

for move, value in solution_chain(x):
    print(f"  {move}  ->  {value}")

# The breadth-first search confirms no shorter positive word exists here:
best = shortest_untangle(x, 30)
print(f"\nshortest possible: {len(best)} letters (the Euclidean word has {len(word)})")

# Note the first R looks wasteful: the denominator jumps from 57 to 146.
# It is not; a positive value must be flipped negative before T's can
# shrink anything, and from the second R on the denominators descend:
# 146, 89, 32, 7, 3, 2.

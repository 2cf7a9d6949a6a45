"""Three-strand braids under the hood, and why no untwisting is needed.

Hanging a tangle by one corner leaves three rope ends to braid.  The two
crossings a, b act on invariants through the same matrix group as the
moves: a acts as T, and the half twist Δ = aba acts as R.  The square of
Δ is central and acts trivially, which has a striking consequence: any
word with inverse letters equals, on invariants, a word with none.  The
magician can always keep twisting in the same direction.
"""

from tangletrick import (
    IDENTITY,
    braid_to_moves,
    braid_to_psl2,
    central_power,
    delta,
    delta_squared,
    exponent_sum,
    format_braid,
    format_moves,
    invert_word,
    make,
    moebius,
    parse_braid,
    positivize,
    positivize_moves,
    word_to_psl2,
)

print(f"a   -> {braid_to_psl2(('a',))}")
print(f"b   -> {braid_to_psl2(('b',))}")
print(f"aba = bab at the matrix level: "
      f"{braid_to_psl2(parse_braid('aba')) == braid_to_psl2(parse_braid('bab'))}\n")

# Δ acts as a tuRn; Δ² is invisible.
d = delta()
print(f"Δ = {format_braid(d)} sends 5/7 to {moebius(braid_to_psl2(d), make(5, 7))}")
print(f"Δ² = {format_braid(delta_squared())} has image {braid_to_psl2(delta_squared())}")
print(f"central_power(Δ²) = {central_power(delta_squared())}, "
      f"exponent sum {exponent_sum(delta_squared())}\n")

# Conjugating Δ² changes nothing: the center is normal in the best way.
w = parse_braid("aBab")
conjugate = w + delta_squared() + invert_word(w)
print(f"{format_braid(conjugate)} is central with power {central_power(conjugate)}\n")

# Positivization: trade each inverse letter for five positive ones.
b = parse_braid("aAbBa")
pos = positivize(b)
print(f"{format_braid(b)} positivizes to {format_braid(pos)}")
print(f"same image: {braid_to_psl2(b) == braid_to_psl2(pos)}\n")

# The same trick at the move level: undoing a Twist without untwisting.
w = ("T'",)
pos_moves = positivize_moves(w)
print(f"T' acts like the positive word {format_moves(pos_moves)}")
print(f"both send 1/3 to the same value: "
      f"{moebius(word_to_psl2(w), make(1, 3))} = "
      f"{moebius(word_to_psl2(pos_moves), make(1, 3))}")
print(f"and T then {format_moves(pos_moves)} acts trivially: "
      f"{word_to_psl2(('T',) + pos_moves) == IDENTITY}")

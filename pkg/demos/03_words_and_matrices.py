"""Why tracking a fraction works: moves are Möbius transformations.

T acts as the matrix (1 1; 0 1) and R as (0 -1; 1 0), both taken up to
sign.  A whole move word collapses to a single matrix, the word's image,
and applying the word to an invariant is one Möbius application of that
image.  The relations R^2 = (TR)^3 = identity hold at the matrix level,
and the matrices fixing 0 are exactly the lower-triangular (1 0; k 1).
"""

from tangletrick import (
    IDENTITY,
    ZERO,
    free_reduce,
    gen_r,
    gen_t,
    invariant_of_word,
    make,
    moebius,
    mul,
    parse_moves,
    stab0_data,
    word_to_psl2,
)

print(f"t = {gen_t()}")
print(f"r = {gen_r()}   (canonical sign: first nonzero entry positive)")
print(f"r·r = {mul(gen_r(), gen_r())}\n")

# A word's matrix acts on 0 exactly as the move-by-move fold does.
word = parse_moves("T^2 R T R T")
image = word_to_psl2(word)
print(f"word {''.join(word)} has image {image}")
print(f"image · 0 = {moebius(image, ZERO)}")
print(f"fold      = {invariant_of_word(word)}\n")

# The two famous relations: both words act trivially on every value.
for text in ("RR", "TRTRTR"):
    mat = word_to_psl2(parse_moves(text))
    print(f"{text:7s} -> {mat}  (identity: {mat == IDENTITY})")
print(f"check on 5/7: {moebius(word_to_psl2(parse_moves('TRTRTR')), make(5, 7))}\n")

# Free reduction cancels formal inverses; the matrix image is blind to it.
word = parse_moves("T R R' T' T R")
print(f"{''.join(word)} reduces to {''.join(free_reduce(word))}, "
      f"image {word_to_psl2(word)}\n")

# Stabilizer of 0: TRT fixes the start.
trt = word_to_psl2(parse_moves("TRT"))
print(f"TRT has image {trt}, fixes 0 with k = {stab0_data(trt)}")
print(f"T alone moves 0, so stab0_data is {stab0_data(gen_t())}")

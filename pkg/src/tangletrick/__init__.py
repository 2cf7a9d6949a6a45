"""Exact-arithmetic engine for the rational tangle trick.

Two ropes, two moves: a Twist sends the tangle invariant x to x + 1, a
tuRn sends it to -1/x.  This package tracks the invariant exactly over
Q ∪ {inf}, solves any value back to the untangle with positive moves via
the Euclidean method, exposes the matrix group and three-strand braid
algebra underneath the trick, and runs interactive trick sessions for
human performers over a small HTTP service.
"""

from .braid import (
    braid_to_psl2,
    central_power,
    delta,
    delta_squared,
    exponent_sum,
    positivize,
    positivize_moves,
)
from .projrat import INF, ZERO, ProjRat, add_int, format_projrat, make, neg_recip, parse_projrat
from .psl2 import (
    IDENTITY,
    Psl2Elem,
    format_psl2,
    gen_r,
    gen_t,
    inverse,
    moebius,
    mul,
    psl2,
    stab0_data,
    word_to_psl2,
)
from .session import (
    LoggedMove,
    Phase,
    PhaseError,
    TrickSession,
    caller_move,
    create_session,
    hint,
    magician_move,
    random_caller_word,
    replay_invariant,
    reveal,
    session_from_invariant,
    snapshot,
    stop_allowed,
)
from .solver import shortest_untangle, solution_chain, untangle_moves
from .tangle import TangleState, apply_letter, apply_move, invariant_of_word, new_untangle
from .words import (
    BRAID_ALPHABET,
    MOVE_ALPHABET,
    BraidWord,
    MoveWord,
    braid_to_moves,
    format_braid,
    format_grouped,
    format_moves,
    free_reduce,
    grouped_moves,
    inverse_letter,
    invert_word,
    moves_to_braid,
    parse_braid,
    parse_moves,
)

__version__ = "0.1.0"

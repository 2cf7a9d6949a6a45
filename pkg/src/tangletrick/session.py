"""One performance of the trick as a small state machine.

Phases run tangling → revealed → untangling → solved: the caller piles up
moves, the assistant reveals the invariant, and the magician drives it
back to zero calling positive moves only.  Sessions are immutable values;
every operation returns a new session, which makes replay, persistence and
per-session serialization in the service layer trivial.

A session normally starts at the untangle.  It can also start from a
pre-built tangle with a known fraction (the on-stage variant where the
props arrive already tangled); such a session has an empty history and is
flagged synthetic, since no recorded performance produced its invariant.
"""

from __future__ import annotations

import enum
import random
import secrets
from dataclasses import dataclass, replace

from .projrat import ProjRat, ZERO, format_projrat, parse_projrat
from .solver import untangle_moves
from .tangle import TangleState, apply_letter, apply_move, new_untangle
from .words import MoveWord, format_moves, parse_moves


class Phase(str, enum.Enum):
    TANGLING = "tangling"
    REVEALED = "revealed"
    UNTANGLING = "untangling"
    SOLVED = "solved"


class PhaseError(Exception):
    """Operation not allowed in the session's current phase or state."""


ROLES = ("caller", "assistant", "magician", "audience")

_POSITIVE_MOVES = ("T", "R")


@dataclass(frozen=True, slots=True)
class LoggedMove:
    role: str
    move: str
    invariant: ProjRat


@dataclass(frozen=True, slots=True)
class TrickSession:
    id: str
    phase: Phase
    state: TangleState
    revealed_invariant: ProjRat | None
    move_log: tuple[LoggedMove, ...]
    rng_seed: int
    min_caller_moves: int = 5
    synthetic: bool = False
    initial_invariant: ProjRat = ZERO


def create_session(seed: int, min_caller_moves: int = 5) -> TrickSession:
    """A fresh session at the untangle, in the tangling phase.

    The seed drives scripted callers (see random_caller_word); two sessions
    with the same seed produce identical random move streams."""
    return TrickSession(
        id=secrets.token_hex(8),
        phase=Phase.TANGLING,
        state=new_untangle(),
        revealed_invariant=None,
        move_log=(),
        rng_seed=seed,
        min_caller_moves=min_caller_moves,
    )


def session_from_invariant(x: ProjRat, seed: int = 0, min_caller_moves: int = 5) -> TrickSession:
    """Start from a pre-built tangle with a known fraction and no history."""
    return replace(
        create_session(seed, min_caller_moves),
        state=TangleState(x, ()),
        synthetic=True,
        initial_invariant=x,
    )


def random_caller_word(seed: int, length: int) -> MoveWord:
    """Deterministic stream of positive caller moves for scripted runs."""
    rng = random.Random(seed)
    return tuple(rng.choice(_POSITIVE_MOVES) for _ in range(length))


def _check_positive(m: str) -> None:
    if m not in _POSITIVE_MOVES:
        raise ValueError(f"only the positive moves T and R may be called, got {m!r}")


def caller_move(s: TrickSession, m: str) -> TrickSession:
    """One called move while tangling."""
    _check_positive(m)
    if s.phase is not Phase.TANGLING:
        raise PhaseError(f"caller moves are only accepted while tangling, not in phase {s.phase.value!r}")
    state = apply_move(s.state, m)
    entry = LoggedMove("caller", m, state.invariant)
    return replace(s, state=state, move_log=s.move_log + (entry,))


def stop_allowed(s: TrickSession) -> bool:
    """Whether the default stop policy lets the assistant reveal now.

    The policy is advisory showmanship, not a precondition: reveal itself
    is legal at any point of the tangling phase."""
    caller_moves = sum(1 for e in s.move_log if e.role == "caller")
    return caller_moves >= s.min_caller_moves


def reveal(s: TrickSession) -> tuple[TrickSession, ProjRat]:
    """The assistant announces the invariant; tangling ends.

    If the invariant is already 0 there is nothing to untangle: the
    session passes through the untangling phase with no moves and is
    immediately solved."""
    if s.phase is not Phase.TANGLING:
        raise PhaseError(f"already revealed (phase {s.phase.value!r})")
    x = s.state.invariant
    phase = Phase.SOLVED if x == ZERO else Phase.REVEALED
    return replace(s, phase=phase, revealed_invariant=x), x


def magician_move(s: TrickSession, m: str) -> TrickSession:
    """One magician move after the reveal; solves when the invariant hits 0."""
    _check_positive(m)
    if s.phase not in (Phase.REVEALED, Phase.UNTANGLING):
        raise PhaseError(f"magician moves are only accepted after the reveal, not in phase {s.phase.value!r}")
    state = apply_move(s.state, m)
    phase = Phase.SOLVED if state.invariant == ZERO else Phase.UNTANGLING
    entry = LoggedMove("magician", m, state.invariant)
    return replace(s, phase=phase, state=state, move_log=s.move_log + (entry,))


def hint(s: TrickSession) -> str:
    """The next move the untangling method would call."""
    if s.phase not in (Phase.REVEALED, Phase.UNTANGLING):
        raise PhaseError(f"no hints in phase {s.phase.value!r}")
    if s.state.invariant == ZERO:
        raise PhaseError("invariant is already 0; nothing to hint")
    return untangle_moves(s.state.invariant)[0]


def replay_invariant(s: TrickSession) -> ProjRat:
    """Recompute the invariant by folding the move log from the start value;
    must always agree with the live state (the audit identity)."""
    x = s.initial_invariant
    for e in s.move_log:
        x = apply_letter(x, e.move)
    return x


def invariant_visible(s: TrickSession, role: str) -> bool:
    """Who may see the running invariant: the assistant always, the magician
    from the reveal onward, the caller and audience only once solved."""
    if role == "assistant":
        return True
    if role == "magician":
        return s.phase is not Phase.TANGLING
    return s.phase is Phase.SOLVED


def snapshot(s: TrickSession, role: str = "audience") -> dict:
    """Role-gated JSON view of a session."""
    if role not in ROLES:
        raise ValueError(f"unknown role {role!r}")
    show = invariant_visible(s, role)
    return {
        "id": s.id,
        "phase": s.phase.value,
        "invariant": format_projrat(s.state.invariant) if show else None,
        "moveLog": [
            {
                "role": e.role,
                "move": e.move,
                "invariant": format_projrat(e.invariant) if show else None,
            }
            for e in s.move_log
        ],
        "revealed": format_projrat(s.revealed_invariant)
        if show and s.revealed_invariant is not None
        else None,
    }


def session_to_state(s: TrickSession) -> dict:
    """Full-fidelity serialization, enough to resume a session exactly."""
    return {
        "id": s.id,
        "phase": s.phase.value,
        "invariant": format_projrat(s.state.invariant),
        "history": format_moves(s.state.history),
        "revealed": format_projrat(s.revealed_invariant)
        if s.revealed_invariant is not None
        else None,
        "moveLog": [
            {"role": e.role, "move": e.move, "invariant": format_projrat(e.invariant)}
            for e in s.move_log
        ],
        "rngSeed": s.rng_seed,
        "minCallerMoves": s.min_caller_moves,
        "synthetic": s.synthetic,
        "initialInvariant": format_projrat(s.initial_invariant),
    }


def session_from_state(data: dict) -> TrickSession:
    return TrickSession(
        id=data["id"],
        phase=Phase(data["phase"]),
        state=TangleState(parse_projrat(data["invariant"]), parse_moves(data["history"])),
        revealed_invariant=parse_projrat(data["revealed"]) if data["revealed"] is not None else None,
        move_log=tuple(
            LoggedMove(e["role"], e["move"], parse_projrat(e["invariant"]))
            for e in data["moveLog"]
        ),
        rng_seed=data["rngSeed"],
        min_caller_moves=data["minCallerMoves"],
        synthetic=data["synthetic"],
        initial_invariant=parse_projrat(data["initialInvariant"]),
    )

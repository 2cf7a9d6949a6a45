import type { Phase, Role, Snapshot } from "./types.js";

/**
 * What one role's screen shows for a snapshot.  These are pure functions of
 * the server data: the page never computes an invariant itself, it only
 * formats what the service sent (nulls mean "hidden from this role").
 */
export interface ViewModel {
    role: Role;
    phase: Phase;
    phaseLabel: string;
    /** Running invariant as text, or null while hidden from this role. */
    invariantText: string | null;
    /** The fraction announced at the reveal, when visible. */
    revealedText: string | null;
    /** One line per performed move, for the move log panel. */
    moveLines: string[];
    /** The untangling so far: one "move → value" line per magician move. */
    chainLines: string[];
    /** Twist count: each T adds one crossing to the schematic. */
    crossingCount: number;
    /** Quarter turns performed, for rotating the schematic square (mod 4). */
    rotationQuarters: number;
    canCall: boolean;
    canReveal: boolean;
    canUntangle: boolean;
    hintAvailable: boolean;
}

const PHASE_LABELS: Record<Phase, string> = {
    tangling: "Tangling — caller in charge",
    revealed: "Revealed — over to the magician",
    untangling: "Untangling — magician calling",
    solved: "Solved — shake the ropes!",
};

function moveLine(role: string, move: string, invariant: string | null): string {
    return invariant === null ? `${role}: ${move}` : `${role}: ${move} → ${invariant}`;
}

export function viewFor(role: Role, snap: Snapshot): ViewModel {
    const magicianMoves = snap.moveLog.filter((entry) => entry.role === "magician");
    return {
        role,
        phase: snap.phase,
        phaseLabel: PHASE_LABELS[snap.phase],
        invariantText: snap.invariant,
        revealedText: snap.revealed,
        moveLines: snap.moveLog.map((e) => moveLine(e.role, e.move, e.invariant)),
        chainLines: magicianMoves.map((e) => `${e.move} → ${e.invariant ?? "·"}`),
        crossingCount: snap.moveLog.filter((e) => e.move === "T").length,
        rotationQuarters: snap.moveLog.filter((e) => e.move === "R").length % 4,
        canCall: role === "caller" && snap.phase === "tangling",
        canReveal: role === "assistant" && snap.phase === "tangling",
        canUntangle:
            role === "magician" && (snap.phase === "revealed" || snap.phase === "untangling"),
        hintAvailable:
            role === "magician" && (snap.phase === "revealed" || snap.phase === "untangling"),
    };
}

/** Corner labels of the schematic square after some quarter turns. */
export function cornerLabels(rotationQuarters: number): [string, string, string, string] {
    const labels: [string, string, string, string] = ["1", "2", "3", "4"];
    const r = ((rotationQuarters % 4) + 4) % 4;
    return [labels[(0 + r) % 4]!, labels[(1 + r) % 4]!, labels[(2 + r) % 4]!, labels[(3 + r) % 4]!];
}

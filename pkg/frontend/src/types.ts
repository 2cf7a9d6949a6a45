export type Role = "caller" | "assistant" | "magician" | "audience";

export type Phase = "tangling" | "revealed" | "untangling" | "solved";

export type Move = "T" | "R";

export interface LoggedMove {
    role: string;
    move: string;
    /** Fraction text like "1/2" or "inf"; null when hidden from this role. */
    invariant: string | null;
}

export interface Snapshot {
    id: string;
    phase: Phase;
    invariant: string | null;
    moveLog: LoggedMove[];
    revealed: string | null;
}

export interface Hint {
    move: Move;
}

import { ApiError, TangleClient } from "./api.js";
import type { Move, Role, Snapshot } from "./types.js";
import { cornerLabels, viewFor } from "./viewmodel.js";

const params = new URLSearchParams(window.location.search);
const client = new TangleClient(params.get("api") ?? "http://127.0.0.1:8642");

const state = {
    sessionId: params.get("session"),
    role: (params.get("role") as Role) ?? "caller",
    snapshot: null as Snapshot | null,
    highlightedHint: null as Move | null,
    busy: false,
};

const $ = <T extends HTMLElement>(id: string): T => {
    const el = document.getElementById(id);
    if (!el) throw new Error(`missing element #${id}`);
    return el as T;
};

function setError(message: string | null): void {
    const box = $("error");
    box.textContent = message ?? "";
    box.style.display = message ? "block" : "none";
}

async function guarded(action: () => Promise<void>): Promise<void> {
    if (state.busy) return;
    state.busy = true;
    try {
        await action();
        setError(null);
    } catch (err) {
        setError(err instanceof ApiError ? `${err.status}: ${err.message}` : String(err));
    } finally {
        state.busy = false;
    }
}

async function refresh(): Promise<void> {
    if (!state.sessionId) return;
    try {
        state.snapshot = await client.getSnapshot(state.sessionId, state.role);
        render();
    } catch (err) {
        if (err instanceof ApiError && err.status === 404) setError("session not found");
    }
}

function render(): void {
    const snap = state.snapshot;
    $("session-label").textContent = state.sessionId ?? "—";
    if (!snap) return;
    const view = viewFor(state.role, snap);

    $("phase").textContent = view.phaseLabel;
    $("invariant").textContent = view.invariantText ?? "hidden";
    $("revealed").textContent = view.revealedText ?? "—";
    $("move-log").innerHTML = view.moveLines.map((line) => `<li>${line}</li>`).join("");
    $("crossings").textContent = String(view.crossingCount);

    const corners = cornerLabels(view.rotationQuarters);
    (["corner-nw", "corner-ne", "corner-se", "corner-sw"] as const).forEach((id, i) => {
        $(id).textContent = corners[i]!;
    });

    const chain = $("chain");
    if (view.phase === "solved" && view.chainLines.length > 0) {
        chain.innerHTML =
            `<h3>The untangling (${view.revealedText ?? "?"} back to 0)</h3>` +
            view.chainLines.map((line) => `<div>${line}</div>`).join("");
    } else {
        chain.innerHTML = "";
    }

    ($("btn-twist") as HTMLButtonElement).disabled = !(view.canCall || view.canUntangle);
    ($("btn-turn") as HTMLButtonElement).disabled = !(view.canCall || view.canUntangle);
    ($("btn-reveal") as HTMLButtonElement).disabled = !view.canReveal;
    ($("btn-hint") as HTMLButtonElement).disabled = !view.hintAvailable;

    $("btn-twist").classList.toggle("hinted", state.highlightedHint === "T");
    $("btn-turn").classList.toggle("hinted", state.highlightedHint === "R");

    document.querySelectorAll<HTMLButtonElement>("#roles button").forEach((btn) => {
        btn.classList.toggle("active", btn.dataset.role === state.role);
    });
}

async function sendMove(move: Move): Promise<void> {
    if (!state.sessionId || !state.snapshot) return;
    const asRole = state.role === "magician" ? "magician" : "caller";
    state.snapshot = await client.postMove(state.sessionId, asRole, move);
    state.highlightedHint = null;
    render();
}

function wire(): void {
    $("btn-create").addEventListener("click", () =>
        guarded(async () => {
            const snap = await client.createSession(Math.floor(Math.random() * 1e9));
            state.sessionId = snap.id;
            ($("session-input") as HTMLInputElement).value = snap.id;
            await refresh();
        }),
    );
    $("btn-join").addEventListener("click", () =>
        guarded(async () => {
            state.sessionId = ($("session-input") as HTMLInputElement).value.trim();
            await refresh();
        }),
    );
    $("btn-twist").addEventListener("click", () => guarded(() => sendMove("T")));
    $("btn-turn").addEventListener("click", () => guarded(() => sendMove("R")));
    $("btn-reveal").addEventListener("click", () =>
        guarded(async () => {
            if (!state.sessionId) return;
            state.snapshot = await client.reveal(state.sessionId);
            render();
        }),
    );
    $("btn-hint").addEventListener("click", () =>
        guarded(async () => {
            if (!state.sessionId) return;
            const hint = await client.hint(state.sessionId);
            state.highlightedHint = hint.move;
            render();
        }),
    );
    document.querySelectorAll<HTMLButtonElement>("#roles button").forEach((btn) => {
        btn.addEventListener("click", () =>
            guarded(async () => {
                state.role = btn.dataset.role as Role;
                await refresh();
            }),
        );
    });

    window.setInterval(() => void refresh(), 1000);
}

wire();
void refresh();

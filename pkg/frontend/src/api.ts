import type { Hint, Move, Role, Snapshot } from "./types.js";

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
        this.name = "ApiError";
    }
}

async function request<T>(method: string, url: string, body?: unknown): Promise<T> {
    const resp = await fetch(url, {
        method,
        headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
        body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const payload = await resp.json().catch(() => ({}));
    if (!resp.ok) {
        const message =
            typeof payload === "object" && payload !== null && "error" in payload
                ? String((payload as { error: unknown }).error)
                : `HTTP ${resp.status}`;
        throw new ApiError(resp.status, message);
    }
    return payload as T;
}

/** Thin typed client for the session service; all mathematics lives there. */
export class TangleClient {
    constructor(readonly baseUrl: string) {}

    createSession(seed: number): Promise<Snapshot> {
        return request("POST", `${this.baseUrl}/sessions`, { seed });
    }

    getSnapshot(id: string, role: Role): Promise<Snapshot> {
        return request("GET", `${this.baseUrl}/sessions/${id}?role=${role}`);
    }

    postMove(id: string, role: Role, move: Move): Promise<Snapshot> {
        return request("POST", `${this.baseUrl}/sessions/${id}/moves`, { role, move });
    }

    reveal(id: string): Promise<Snapshot> {
        return request("POST", `${this.baseUrl}/sessions/${id}/reveal`);
    }

    hint(id: string): Promise<Hint> {
        return request("GET", `${this.baseUrl}/sessions/${id}/hint`);
    }
}

import type { GameStateWire, HintWire, NewGameParams } from "./types.js";

export class ApiError extends Error {
    constructor(
        readonly status: number,
        message: string,
        readonly maxTake: number | null = null,
    ) {
        super(message);
    }
}

async function parse<T>(resp: Response): Promise<T> {
    const text = await resp.text();
    const body = text ? JSON.parse(text) : null;
    if (!resp.ok) {
        const message = body && typeof body.error === "string" ? body.error : resp.statusText;
        const cap = body && typeof body.maxTake === "number" ? body.maxTake : null;
        throw new ApiError(resp.status, message, cap);
    }
    return body as T;
}

export class ApiClient {
    constructor(readonly baseUrl: string) {}

    private url(path: string): string {
        return this.baseUrl.replace(/\/$/, "") + path;
    }

    async createGame(params: NewGameParams): Promise<GameStateWire> {
        const resp = await fetch(this.url("/games"), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(params),
        });
        return parse<GameStateWire>(resp);
    }

    async getGame(id: string): Promise<GameStateWire> {
        return parse<GameStateWire>(await fetch(this.url(`/games/${id}`)));
    }

    async move(id: string, take: number): Promise<GameStateWire> {
        const resp = await fetch(this.url(`/games/${id}/moves`), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ take }),
        });
        return parse<GameStateWire>(resp);
    }

    async hint(id: string): Promise<HintWire> {
        return parse<HintWire>(await fetch(this.url(`/games/${id}/hint`)));
    }

    async deleteGame(id: string): Promise<void> {
        const resp = await fetch(this.url(`/games/${id}`), { method: "DELETE" });
        if (!resp.ok && resp.status !== 404) {
            throw new ApiError(resp.status, resp.statusText);
        }
    }
}

import { ApiClient, ApiError } from "./api.js";
import type { EngineReply, GameStateWire, HintWire, NewGameParams } from "./types.js";

export type Phase = "setup" | "playing" | "won" | "lost";

/** Everything the page renders. Derived from service responses only; the
 * client performs no game logic beyond clamping the take input. */
export interface GameView {
    phase: Phase;
    sessionId: string | null;
    q: number;
    variant: string;
    beans: number;
    maxTake: number | null;
    toMove: string | null;
    representation: string[];
    leastSummand: string | null;
    history: { actor: string; take: number }[];
    hint: HintWire | null;
    lastEngineReply: EngineReply | null;
    banner: string | null;
    busy: boolean;
}

const INITIAL: GameView = {
    phase: "setup",
    sessionId: null,
    q: 3,
    variant: "standard",
    beans: 0,
    maxTake: null,
    toMove: null,
    representation: [],
    leastSummand: null,
    history: [],
    hint: null,
    lastEngineReply: null,
    banner: null,
    busy: false,
};

export class GameController {
    view: GameView = { ...INITIAL };
    private listeners: Array<(view: GameView) => void> = [];

    constructor(private readonly api: ApiClient) {}

    onChange(listener: (view: GameView) => void): void {
        this.listeners.push(listener);
    }

    private emit(): void {
        for (const listener of this.listeners) listener(this.view);
    }

    private absorb(state: GameStateWire): void {
        this.view = {
            ...this.view,
            phase:
                state.status === "playing"
                    ? "playing"
                    : state.status === "humanWon"
                      ? "won"
                      : "lost",
            sessionId: state.id,
            q: state.q,
            variant: state.variant,
            beans: state.beans,
            maxTake: state.maxTake,
            toMove: state.toMove,
            representation: state.representation,
            leastSummand: state.leastSummand,
            history: state.history,
            lastEngineReply: state.engineReply ?? this.view.lastEngineReply,
            banner:
                state.status === "humanWon"
                    ? "You took the last bean — you win!"
                    : state.status === "engineWon"
                      ? "Engine took the last bean — engine wins."
                      : null,
        };
        this.emit();
    }

    /** Clamp a raw input to the service-reported cap (the only client-side rule). */
    clampTake(raw: number): number {
        const cap = this.view.maxTake ?? 1;
        return Math.min(Math.max(Math.trunc(raw) || 1, 1), Math.max(cap, 1));
    }

    private async guarded<T>(work: () => Promise<T>): Promise<T | null> {
        if (this.view.busy) return null; // at most one in-flight request
        this.view = { ...this.view, busy: true };
        this.emit();
        try {
            return await work();
        } catch (err) {
            if (err instanceof ApiError) {
                const capNote = err.maxTake !== null ? ` (current cap: ${err.maxTake})` : "";
                this.view = { ...this.view, banner: `${err.message}${capNote}` };
            } else {
                this.view = {
                    ...this.view,
                    banner: "service unreachable — check the server and retry",
                };
            }
            return null;
        } finally {
            this.view = { ...this.view, busy: false };
            this.emit();
        }
    }

    async newGame(params: NewGameParams): Promise<void> {
        await this.guarded(async () => {
            const state = await this.api.createGame(params);
            this.view = { ...INITIAL, busy: this.view.busy };
            this.absorb(state);
        });
    }

    async submitMove(rawTake: number): Promise<void> {
        const id = this.view.sessionId;
        if (!id || this.view.phase !== "playing") return;
        const take = this.clampTake(rawTake);
        await this.guarded(async () => {
            const state = await this.api.move(id, take);
            this.view = { ...this.view, hint: null };
            this.absorb(state);
        });
    }

    async requestHint(): Promise<void> {
        const id = this.view.sessionId;
        if (!id || this.view.phase !== "playing") return;
        await this.guarded(async () => {
            const hint = await this.api.hint(id);
            const note = hint.winning
                ? `Hint: take ${hint.take} (the least summand).`
                : `No winning move from a G-number pile; fallback: take ${hint.take}.`;
            this.view = { ...this.view, hint, banner: note };
            this.emit();
        });
    }

    async refresh(): Promise<void> {
        const id = this.view.sessionId;
        if (!id) return;
        await this.guarded(async () => {
            this.absorb(await this.api.getGame(id));
        });
    }
}

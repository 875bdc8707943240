export type Variant = "standard" | "modified";
export type Actor = "human" | "engine";
export type GameStatus = "playing" | "humanWon" | "engineWon";

export interface HistoryEntry {
    actor: Actor;
    take: number;
}

export interface EngineReply {
    take: number;
    leastSummand: boolean;
    winning: boolean;
    representation: string[];
}

export interface GameStateWire {
    id: string;
    q: number;
    variant: Variant;
    initialBeans: number;
    beans: number;
    lastTake: number | null;
    toMove: Actor | null;
    maxTake: number | null;
    status: GameStatus;
    history: HistoryEntry[];
    representation: string[];
    leastSummand: string | null;
    createdAt: number;
    updatedAt: number;
    engineReply?: EngineReply;
}

export interface HintWire {
    take: number;
    leastSummand: boolean;
    winning: boolean;
    representation: string[];
}

export interface NewGameParams {
    q: number;
    variant: Variant;
    beans: number;
    engineFirst?: boolean;
}

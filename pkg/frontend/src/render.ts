import type { GameView } from "./controller.js";

const MAX_DOTS = 120; // larger summand groups render as a labeled block

function beanGroup(summand: string, highlight: boolean): HTMLElement {
    const group = document.createElement("div");
    group.className = "bean-group" + (highlight ? " least" : "");
    const label = document.createElement("div");
    label.className = "group-label";
    label.textContent = summand;
    group.appendChild(label);
    const dots = document.createElement("div");
    dots.className = "dots";
    const count = Number(summand);
    if (Number.isSafeInteger(count) && count <= MAX_DOTS) {
        for (let i = 0; i < count; i++) {
            const dot = document.createElement("span");
            dot.className = "bean";
            dots.appendChild(dot);
        }
    } else {
        const block = document.createElement("span");
        block.className = "bean-block";
        block.textContent = `x ${summand}`;
        dots.appendChild(block);
    }
    group.appendChild(dots);
    return group;
}

export class Renderer {
    private board: HTMLElement;
    private status: HTMLElement;
    private historyList: HTMLElement;
    private banner: HTMLElement;
    private takeInput: HTMLInputElement;
    private moveButton: HTMLButtonElement;
    private hintButton: HTMLButtonElement;
    private capLabel: HTMLElement;

    constructor(root: Document) {
        this.board = root.getElementById("board")!;
        this.status = root.getElementById("status")!;
        this.historyList = root.getElementById("history")!;
        this.banner = root.getElementById("banner")!;
        this.takeInput = root.getElementById("take") as HTMLInputElement;
        this.moveButton = root.getElementById("move") as HTMLButtonElement;
        this.hintButton = root.getElementById("hint") as HTMLButtonElement;
        this.capLabel = root.getElementById("cap")!;
    }

    render(view: GameView): void {
        this.board.replaceChildren();
        view.representation.forEach((summand, idx) => {
            const isLeast =
                view.leastSummand !== null && idx === view.representation.length - 1;
            this.board.appendChild(beanGroup(summand, isLeast));
        });

        if (view.phase === "setup") {
            this.status.textContent = "configure a game to start";
        } else {
            const turn = view.phase === "playing" ? `${view.toMove} to move` : "game over";
            this.status.textContent =
                `${view.beans} beans | q=${view.q} ${view.variant} | ${turn}`;
        }

        // the cap shown is exactly the service's; the client never computes it
        this.capLabel.textContent = view.maxTake === null ? "-" : String(view.maxTake);
        this.takeInput.max = view.maxTake === null ? "" : String(view.maxTake);
        this.takeInput.min = "1";

        const inputsEnabled = view.phase === "playing" && !view.busy;
        this.takeInput.disabled = !inputsEnabled;
        this.moveButton.disabled = !inputsEnabled;
        this.hintButton.disabled = !inputsEnabled;

        this.historyList.replaceChildren(
            ...view.history.map((entry) => {
                const item = document.createElement("li");
                item.textContent = `${entry.actor} took ${entry.take}`;
                return item;
            }),
        );

        this.banner.textContent = view.banner ?? "";
        this.banner.className =
            view.phase === "won" ? "banner win" : view.phase === "lost" ? "banner loss" : "banner";
        if (view.hint) {
            this.takeInput.value = String(view.hint.take);
        }
    }
}

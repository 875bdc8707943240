import { ApiClient } from "./api.js";
import { GameController } from "./controller.js";
import { Renderer } from "./render.js";
import type { Variant } from "./types.js";

function baseUrl(): string {
    const fromQuery = new URLSearchParams(window.location.search).get("api");
    return fromQuery ?? `http://${window.location.hostname || "127.0.0.1"}:8717`;
}

const controller = new GameController(new ApiClient(baseUrl()));
const renderer = new Renderer(document);
controller.onChange((view) => renderer.render(view));

const form = document.getElementById("setup") as HTMLFormElement;
form.addEventListener("submit", (event) => {
    event.preventDefault();
    const q = Number((document.getElementById("q") as HTMLSelectElement).value);
    const variant = (document.getElementById("variant") as HTMLSelectElement).value as Variant;
    const beansField = document.getElementById("beans") as HTMLInputElement;
    const beans = Number(beansField.value);
    if (!Number.isInteger(beans) || beans < 2) {
        beansField.setCustomValidity("at least 2 beans are needed");
        beansField.reportValidity();
        return;
    }
    beansField.setCustomValidity("");
    const engineFirst = (document.getElementById("engine-first") as HTMLInputElement).checked;
    void controller.newGame({ q, variant, beans, engineFirst });
});

(document.getElementById("move") as HTMLButtonElement).addEventListener("click", () => {
    const raw = Number((document.getElementById("take") as HTMLInputElement).value);
    void controller.submitMove(raw);
});

(document.getElementById("hint") as HTMLButtonElement).addEventListener("click", () => {
    void controller.requestHint();
});

renderer.render(controller.view);

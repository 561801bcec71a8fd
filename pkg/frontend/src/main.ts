/** Browser bootstrap: wires the new-game form, piece clicks, and the hint
 * button to the controller, and re-renders on every state change. */

import { ApiClient } from "./api.js";
import { GameController } from "./controller.js";
import { renderApp } from "./render.js";

export const PRESETS: Record<string, string> = {
  "intro pizza (15)": "cyc(0,1,0,1,0,0,1,0,2,0,0,2,0,2,0)",
  "cyc(0,1,0,2)": "cyc(0,1,0,2)",
  "tes(4,3,1,2)": "tes(4,3,1,2)",
};

const WEIGHT_RE = /^-?\d+(\.\d+)?(\/\d+)?$/;

/** Inline validation for the custom-weights field: comma-separated integers,
 * decimals, or p/q fractions. Returns an error message or null. */
export function validateWeights(text: string): string | null {
  const parts = text.split(",").map((s) => s.trim());
  if (parts.length === 0 || parts.some((p) => p === "")) {
    return "enter comma-separated weights";
  }
  const bad = parts.filter((p) => !WEIGHT_RE.test(p));
  if (bad.length) return `not a weight: ${bad[0]}`;
  return null;
}

export function shorthandFromForm(preset: string, custom: string): string {
  if (preset !== "custom") return PRESETS[preset];
  return `cyc(${custom.split(",").map((s) => s.trim()).join(",")})`;
}

declare global {
  interface Window {
    PIZZA_API_BASE?: string;
  }
}

export function mount(root: HTMLElement): void {
  const base = window.PIZZA_API_BASE ?? "";
  const api = new ApiClient(base);
  const boardEl = root.querySelector<HTMLElement>("#game")!;
  const errEl = root.querySelector<HTMLElement>("#form-error")!;
  const controller = new GameController(api, () => {
    const vm = controller.viewModel();
    boardEl.innerHTML = vm ? renderApp(vm) : "";
  });

  boardEl.addEventListener("click", (ev) => {
    const target = (ev.target as HTMLElement).closest<HTMLElement>(
      "[data-piece],[data-action]",
    );
    if (!target) return;
    const piece = target.dataset.piece;
    if (piece !== undefined) void controller.clickPiece(Number(piece));
    else if (target.dataset.action === "hint") void controller.requestHint();
    else if (target.dataset.action === "pass") void controller.pass();
  });

  root.querySelector("#new-game")!.addEventListener("click", () => {
    const preset = root.querySelector<HTMLSelectElement>("#preset")!.value;
    const custom = root.querySelector<HTMLInputElement>("#custom")!.value;
    const seat = root.querySelector<HTMLSelectElement>("#seat")!.value;
    if (preset === "custom") {
      const err = validateWeights(custom);
      if (err) {
        errEl.textContent = err;
        return;
      }
    }
    errEl.textContent = "";
    void controller
      .newGame({
        shorthand: shorthandFromForm(preset, custom),
        engine_seat: seat as "player1" | "player2" | "none",
      })
      .catch((e) => {
        errEl.textContent = String(e.message ?? e);
      });
  });
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mount(document.getElementById("app")!);
}

/** Pure HTML/SVG rendering of a ViewModel. The mount layer (main.ts) injects
 * this markup and wires clicks via data-piece attributes. */

import type { PieceView, ViewModel } from "./view.js";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function pieceClass(p: PieceView): string {
  const cls = ["piece"];
  if (p.eaten) cls.push("eaten");
  if (p.clickable) cls.push("clickable");
  if (p.hinted) cls.push("hinted");
  return cls.join(" ");
}

function renderWheel(vm: ViewModel): string {
  const byId = new Map(vm.pieces.map((p) => [p.id, p]));
  const parts = vm.sectors.map((s) => {
    const p = byId.get(s.id)!;
    if (p.eaten) return ""; // the hole left by eaten pieces
    const click = p.clickable ? ` data-piece="${s.id}"` : "";
    return (
      `<g class="${pieceClass(p)}"${click}>` +
      `<path d="${s.path}"></path>` +
      `<text x="${s.labelX.toFixed(1)}" y="${s.labelY.toFixed(1)}">` +
      `${esc(String(s.weight))}</text></g>`
    );
  });
  return `<svg viewBox="0 0 400 400" class="wheel">${parts.join("")}</svg>`;
}

function renderRow(vm: ViewModel): string {
  const byId = new Map(vm.pieces.map((p) => [p.id, p]));
  const h = 90;
  const parts = vm.tiles.map((t) => {
    const p = byId.get(t.id)!;
    if (p.eaten) return "";
    const click = p.clickable ? ` data-piece="${t.id}"` : "";
    return (
      `<g class="${pieceClass(p)}"${click}>` +
      `<rect x="${t.x + 2}" y="4" width="${t.width - 4}" height="${h - 8}" rx="8"></rect>` +
      `<text x="${t.x + t.width / 2}" y="${h / 2 + 5}">${esc(String(t.weight))}</text>` +
      `</g>`
    );
  });
  const w = vm.tiles.length * (vm.tiles[0]?.width ?? 72);
  return `<svg viewBox="0 0 ${Math.max(w, 72)} ${h}" class="row">${parts.join("")}</svg>`;
}

export function renderBoard(vm: ViewModel): string {
  return vm.layout === "wheel" ? renderWheel(vm) : renderRow(vm);
}

export function renderApp(vm: ViewModel): string {
  const hint = vm.hint
    ? `<div class="hint">Value for the player to move: <b>${esc(vm.hint.value)}</b></div>`
    : "";
  return (
    `<div class="status">${esc(vm.banner)}</div>` +
    `<div class="scores">You can see the running totals: ` +
    `player 1: <b>${esc(vm.scores.player1)}</b> · ` +
    `player 2: <b>${esc(vm.scores.player2)}</b></div>` +
    hint +
    `<div class="board">${renderBoard(vm)}</div>` +
    `<div class="controls">` +
    `<button data-action="hint"${vm.finished ? " disabled" : ""}>Hint</button>` +
    `<button data-action="pass"${vm.passLegal ? "" : " disabled"}>Pass</button>` +
    `</div>`
  );
}

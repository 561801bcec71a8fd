import { describe, expect, it } from "vitest";

import type { Analysis, BoardJson, GameState } from "../src/api.js";
import { renderApp } from "../src/render.js";
import { buildViewModel } from "../src/view.js";

function cycle(ws: number[], alive?: number[], available: number[] = []): BoardJson {
  const n = ws.length;
  const keep = new Set(alive ?? ws.map((_, i) => i + 1));
  return {
    vertices: ws
      .map((w, i) => ({ id: i + 1, weight: w }))
      .filter((v) => keep.has(v.id)),
    edges: ws
      .map((_, i) => [i + 1, i + 2 > n ? 1 : i + 2] as [number, number])
      .filter(([a, b]) => keep.has(a) && keep.has(b)),
    available,
  };
}

function state(overrides: Partial<GameState>): GameState {
  const initial = cycle([0, 1, 0, 2]);
  return {
    game_id: "g",
    rules: "normal",
    engine_seat: "player2",
    board: initial,
    initial_board: initial,
    legal_moves: [1, 2, 3, 4],
    pass_legal: false,
    history: [],
    scores: { player1: 0, player2: 0 },
    to_move: 1,
    finished: false,
    ...overrides,
  };
}

describe("view model", () => {
  it("clickable pieces are exactly the server's legal moves", () => {
    const s = state({
      board: cycle([0, 1, 0, 2], [1, 2, 3], [1, 3]),
      legal_moves: [1, 3],
    });
    const vm = buildViewModel(s, null);
    const clickable = vm.pieces.filter((p) => p.clickable).map((p) => p.id);
    expect(clickable).toEqual([1, 3]);
    expect(vm.pieces.find((p) => p.id === 4)!.eaten).toBe(true);
  });

  it("nothing is clickable on the engine's turn or mid-request", () => {
    const engineTurn = buildViewModel(state({ to_move: 2 }), null);
    expect(engineTurn.pieces.every((p) => !p.clickable)).toBe(true);
    const busy = buildViewModel(state({}), null, true);
    expect(busy.pieces.every((p) => !p.clickable)).toBe(true);
    expect(busy.banner).toMatch(/Waiting/);
  });

  it("hint outlines the optimal pieces and shows the value", () => {
    const analysis: Analysis = {
      value_to_move: 3,
      optimal_moves: [2, 4],
      per_move_outcomes: { "1": 3, "2": 3, "3": 3, "4": 3 },
      pass_optimal: false,
    };
    const vm = buildViewModel(state({}), analysis);
    expect(vm.hint).toEqual({ value: "3", pieces: [2, 4] });
    expect(vm.pieces.filter((p) => p.hinted).map((p) => p.id)).toEqual([2, 4]);
  });

  it("finished games show the outcome and disable the hint", () => {
    const s = state({
      finished: true,
      board: cycle([0, 1, 0, 2], []),
      legal_moves: [],
      scores: { player1: 3, player2: -3 },
    });
    const vm = buildViewModel(s, null);
    expect(vm.banner).toContain("outcome for player 1: 3");
    expect(vm.hint).toBeNull();
    const html = renderApp(vm);
    expect(html).toContain('data-action="hint" disabled');
  });
});

describe("rendered markup", () => {
  it("emits click targets only for clickable pieces", () => {
    const s = state({
      board: cycle([0, 1, 0, 2], [2, 3, 4], [2, 4]),
      legal_moves: [2, 4],
    });
    const html = renderApp(buildViewModel(s, null));
    const offered = [...html.matchAll(/data-piece="(\d+)"/g)].map((m) =>
      Number(m[1]),
    );
    expect(offered.sort()).toEqual([2, 4]);
  });

  it("eaten pieces leave a hole in the wheel", () => {
    const s = state({
      board: cycle([0, 1, 0, 2], [1, 2, 3]),
      legal_moves: [1, 3],
    });
    const html = renderApp(buildViewModel(s, null));
    // four sectors were laid out, only three survive
    expect((html.match(/<path /g) ?? []).length).toBe(3);
  });

  it("scores come verbatim from the server snapshot", () => {
    const s = state({ scores: { player1: "5/2", player2: "-5/2" } });
    const html = renderApp(buildViewModel(s, null));
    expect(html).toContain("5/2");
    expect(html).toContain("-5/2");
  });
});

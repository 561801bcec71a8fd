/** End-to-end tests against a real game service spawned as a subprocess.
 * The scripted session drives the same controller/view code the browser runs. */

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, weightsSumToZero } from "../src/api.js";
import { GameController } from "../src/controller.js";
import { renderApp } from "../src/render.js";
import { startServer, type TestServer } from "./server.js";

let server: TestServer;
let api: ApiClient;

beforeAll(async () => {
  server = await startServer();
  api = new ApiClient(server.baseUrl);
});

afterAll(async () => {
  await server.stop();
});

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

describe("scripted session on cyc(0,1,0,2)", () => {
  it("plays a full game against the engine with a zero-sum ledger", async () => {
    const controller = new GameController(api);
    await controller.newGame({
      shorthand: "cyc(0,1,0,2)",
      engine_seat: "player2",
    });
    let vm = controller.viewModel()!;
    expect(vm.layout).toBe("wheel");
    expect(vm.pieces.filter((p) => p.clickable).map((p) => p.id)).toEqual(
      [1, 2, 3, 4],
    );

    // hint: the first player is worth 3 here, two optimal pieces outlined
    await controller.requestHint();
    vm = controller.viewModel()!;
    expect(vm.hint!.value).toBe("3");
    expect(vm.hint!.pieces).toEqual([2, 4]);
    expect(renderApp(vm)).toContain("Value for the player to move: <b>3</b>");

    // play the whole game taking a hinted piece each turn
    while (!vm.finished) {
      await controller.requestHint();
      vm = controller.viewModel()!;
      const target = vm.pieces.find(
        (p) => p.clickable && vm.hint!.pieces.includes(p.id),
      )!;
      await controller.clickPiece(target.id);
      vm = controller.viewModel()!;
      const s = controller.gameState!;
      expect(weightsSumToZero(s.scores.player1, s.scores.player2)).toBe(true);
    }
    expect(controller.gameState!.scores.player1).toBe(3);
    expect(vm.banner).toContain("outcome for player 1: 3");
  });

  it("a refresh reconstructs identical state from the server snapshot", async () => {
    const controller = new GameController(api);
    await controller.newGame({
      shorthand: "cyc(0,1,0,2)",
      engine_seat: "player2",
    });
    await controller.clickPiece(4);
    const before = JSON.stringify(controller.gameState);
    await controller.refresh();
    expect(JSON.stringify(controller.gameState)).toBe(before);
  });

  it("ignores clicks on pieces the server does not offer", async () => {
    const controller = new GameController(api);
    await controller.newGame({
      shorthand: "path(1,2,3,4)",
      engine_seat: "none",
    });
    await controller.clickPiece(1);
    const moves = controller.gameState!.history.length;
    await controller.clickPiece(3); // interior piece: not adjacent to the hole
    expect(controller.gameState!.history.length).toBe(moves);
  });
});

describe("random playouts", () => {
  it("never offers an illegal piece across 50 games", async () => {
    const rand = mulberry32(2026);
    for (let game = 0; game < 50; game++) {
      const n = 3 + Math.floor(rand() * 8);
      const ws = Array.from({ length: n }, () => Math.floor(rand() * 4) - 1);
      const kind = ["cyc", "path", "tes", "st"][Math.floor(rand() * 4)];
      const seat = rand() < 0.5 ? "player1" : "player2";
      const controller = new GameController(api);
      await controller.newGame({
        shorthand: `${kind}(${ws.join(",")})`,
        engine_seat: seat,
      });
      while (!controller.gameState!.finished) {
        const vm = controller.viewModel()!;
        const clickable = vm.pieces
          .filter((p) => p.clickable)
          .map((p) => p.id)
          .sort((a, b) => a - b);
        // the invariant: what the UI offers is exactly what the server allows
        expect(clickable).toEqual(
          [...controller.gameState!.legal_moves].sort((a, b) => a - b),
        );
        const pick = clickable[Math.floor(rand() * clickable.length)];
        await controller.clickPiece(pick);
        const s = controller.gameState!;
        expect(weightsSumToZero(s.scores.player1, s.scores.player2)).toBe(true);
      }
      await api.deleteGame(controller.gameState!.game_id);
    }
  });
});

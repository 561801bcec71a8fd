/** Pure view-model construction: everything the renderer needs, derived from
 * the latest server snapshot. No game logic lives here — a piece is clickable
 * exactly when the server lists it as a legal move and it is the human's turn. */

import type { Analysis, GameState, Weight } from "./api.js";
import { formatWeight } from "./api.js";
import { isWheel, rowTiles, wheelSectors, type Sector, type Tile } from "./geometry.js";

export interface PieceView {
  id: number;
  weight: Weight;
  eaten: boolean;
  clickable: boolean;
  hinted: boolean;
}

export interface ViewModel {
  layout: "wheel" | "row";
  pieces: PieceView[];
  sectors: Sector[]; // geometry of the initial board; eaten pieces become holes
  tiles: Tile[];
  scores: { player1: string; player2: string };
  toMove: 1 | 2;
  finished: boolean;
  humanTurn: boolean;
  passLegal: boolean;
  hint: { value: string; pieces: number[] } | null;
  banner: string;
}

function engineSeatNumber(state: GameState): number {
  return { player1: 1, player2: 2, none: 0 }[state.engine_seat];
}

export function buildViewModel(
  state: GameState,
  analysis: Analysis | null,
  busy = false,
): ViewModel {
  const alive = new Set(state.board.vertices.map((v) => v.id));
  const legal = new Set(state.legal_moves);
  const humanTurn =
    !state.finished && engineSeatNumber(state) !== state.to_move;
  const interactive = humanTurn && !busy;
  const hinted = new Set(analysis && !state.finished ? analysis.optimal_moves : []);
  const pieces: PieceView[] = state.initial_board.vertices.map((v) => ({
    id: v.id,
    weight: v.weight,
    eaten: !alive.has(v.id),
    clickable: interactive && legal.has(v.id),
    hinted: hinted.has(v.id),
  }));
  const wheel = isWheel(state.initial_board);
  let banner: string;
  if (state.finished) {
    banner = `Game over — outcome for player 1: ${formatWeight(state.scores.player1)}`;
  } else if (busy) {
    banner = "Waiting for the server…";
  } else if (humanTurn) {
    banner = `Your move (player ${state.to_move})`;
  } else {
    banner = `Engine to move (player ${state.to_move})`;
  }
  return {
    layout: wheel ? "wheel" : "row",
    pieces,
    sectors: wheel ? wheelSectors(state.initial_board.vertices) : [],
    tiles: wheel ? [] : rowTiles(state.initial_board.vertices),
    scores: {
      player1: formatWeight(state.scores.player1),
      player2: formatWeight(state.scores.player2),
    },
    toMove: state.to_move,
    finished: state.finished,
    humanTurn,
    passLegal: interactive && state.pass_legal,
    hint:
      analysis && !state.finished
        ? {
            value: formatWeight(analysis.value_to_move),
            pieces: analysis.optimal_moves,
          }
        : null,
    banner,
  };
}

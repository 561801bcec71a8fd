/** Typed client for the game service's /api/v1 endpoints. */

export type Weight = number | string; // integers as numbers, fractions as "p/q"

export interface VertexJson {
  id: number;
  weight: Weight;
}

export interface BoardJson {
  vertices: VertexJson[];
  edges: [number, number][];
  available: number[];
}

export interface HistoryEntry {
  mover: 1 | 2;
  pass: boolean;
  vertex?: number;
  weight?: Weight;
}

export interface GameState {
  game_id: string;
  rules: string;
  engine_seat: "player1" | "player2" | "none";
  board: BoardJson;
  initial_board: BoardJson;
  legal_moves: number[];
  pass_legal: boolean;
  history: HistoryEntry[];
  scores: { player1: Weight; player2: Weight };
  to_move: 1 | 2;
  finished: boolean;
}

export interface Analysis {
  value_to_move: Weight;
  optimal_moves: number[];
  per_move_outcomes: Record<string, Weight>;
  pass_optimal: boolean;
}

export interface NewGameForm {
  shorthand?: string;
  board?: BoardJson;
  rules?: string;
  engine_seat?: "player1" | "player2" | "none";
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

/** Exact rational arithmetic on JSON weights, so the UI never floats a score. */
export function weightToFraction(w: Weight): [bigint, bigint] {
  if (typeof w === "number") return [BigInt(w), 1n];
  const [p, q] = w.split("/");
  return [BigInt(p), q === undefined ? 1n : BigInt(q)];
}

export function weightsSumToZero(a: Weight, b: Weight): boolean {
  const [pa, qa] = weightToFraction(a);
  const [pb, qb] = weightToFraction(b);
  return pa * qb + pb * qa === 0n;
}

export function formatWeight(w: Weight): string {
  return String(w);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const res = await fetch(`${this.baseUrl}/api/v1${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) {
      let detail = res.statusText;
      try {
        const data = await res.json();
        if (data && typeof data.detail === "string") detail = data.detail;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(res.status, detail);
    }
    if (res.status === 204) return undefined as T;
    return (await res.json()) as T;
  }

  createGame(form: NewGameForm): Promise<GameState> {
    return this.request("POST", "/games", form);
  }

  getGame(id: string): Promise<GameState> {
    return this.request("GET", `/games/${id}`);
  }

  listGames(): Promise<unknown[]> {
    return this.request("GET", "/games");
  }

  deleteGame(id: string): Promise<void> {
    return this.request("DELETE", `/games/${id}`);
  }

  move(id: string, vertex: number): Promise<GameState> {
    return this.request("POST", `/games/${id}/moves`, { vertex });
  }

  pass(id: string): Promise<GameState> {
    return this.request("POST", `/games/${id}/moves`, { pass: true });
  }

  analysis(id: string): Promise<Analysis> {
    return this.request("GET", `/games/${id}/analysis`);
  }
}

/** Session controller: owns the latest server snapshot and the hint overlay,
 * funnels every mutation through the API one at a time, and exposes the
 * ViewModel the renderer consumes. DOM-free so it is directly testable. */

import { ApiClient, type Analysis, type GameState, type NewGameForm } from "./api.js";
import { buildViewModel, type ViewModel } from "./view.js";

export class GameController {
  private state: GameState | null = null;
  private hint: Analysis | null = null;
  private busy = false;

  constructor(
    readonly api: ApiClient,
    private readonly onChange: () => void = () => {},
  ) {}

  get gameState(): GameState | null {
    return this.state;
  }

  viewModel(): ViewModel | null {
    return this.state ? buildViewModel(this.state, this.hint, this.busy) : null;
  }

  /** Run one mutation with inputs disabled while it is in flight. */
  private async mutate(fn: () => Promise<GameState>): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.onChange();
    try {
      this.state = await fn();
      this.hint = null; // stale after any move
    } finally {
      this.busy = false;
      this.onChange();
    }
  }

  async newGame(form: NewGameForm): Promise<void> {
    await this.mutate(() => this.api.createGame(form));
  }

  async clickPiece(vertex: number): Promise<void> {
    const vm = this.viewModel();
    if (!vm || !vm.pieces.some((p) => p.id === vertex && p.clickable)) return;
    await this.mutate(() => this.api.move(this.state!.game_id, vertex));
  }

  async pass(): Promise<void> {
    const vm = this.viewModel();
    if (!vm || !vm.passLegal) return;
    await this.mutate(() => this.api.pass(this.state!.game_id));
  }

  async requestHint(): Promise<void> {
    if (!this.state || this.state.finished || this.busy) return;
    this.hint = await this.api.analysis(this.state.game_id);
    this.onChange();
  }

  /** Rebuild state from the server snapshot, as a page refresh would. */
  async refresh(): Promise<void> {
    if (!this.state) return;
    this.state = await this.api.getGame(this.state.game_id);
    this.hint = null;
    this.onChange();
  }
}

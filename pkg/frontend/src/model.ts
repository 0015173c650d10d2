// View model: mirrors the last server snapshot and queues user actions
// so only one request is ever in flight. No game rules are evaluated
// client-side; every state change is a server response.

import { ApiError, CreateBody, GameApi, Snapshot } from "./api.js";

export interface BoardMeta {
  kind: "grid" | "graph";
  rows?: number;
  cols?: number;
  seed: number;
}

export interface HintState {
  color: number;
  remaining: number;
}

export type Listener = () => void;

export class GameModel {
  snapshot: Snapshot | null = null;
  meta: BoardMeta = { kind: "graph", seed: 1 };
  notice: string | null = null;
  hint: HintState | null = null;
  initialOptimal: number | null = null;
  busy = false;

  private queue: Promise<void> = Promise.resolve();
  private listeners: Listener[] = [];

  constructor(private api: GameApi) {}

  onChange(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  /** Serialize actions: each starts after the previous request settled. */
  private enqueue(action: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(async () => {
      this.busy = true;
      this.emit();
      try {
        await action();
      } finally {
        this.busy = false;
        this.emit();
      }
    });
    return this.queue;
  }

  newGame(body: CreateBody, meta: BoardMeta): Promise<void> {
    return this.enqueue(async () => {
      this.notice = null;
      this.hint = null;
      this.snapshot = await this.api.create(body);
      this.meta = meta;
      this.initialOptimal = this.snapshot.optimal_remaining;
    });
  }

  clickColor(color: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.snapshot || this.snapshot.finished) return;
      this.notice = null;
      try {
        this.snapshot = await this.api.move(this.snapshot.id, color);
        this.hint = null;
      } catch (err) {
        if (err instanceof ApiError && err.status === 409) {
          this.notice = `idle move: that is already the territory color`;
        } else if (err instanceof ApiError) {
          this.notice = err.message;
        } else {
          throw err;
        }
      }
    });
  }

  requestHint(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.snapshot || this.snapshot.finished) return;
      this.notice = null;
      try {
        const h = await this.api.hint(this.snapshot.id);
        this.hint = { color: h.color, remaining: h.optimal_remaining };
      } catch (err) {
        if (err instanceof ApiError) {
          this.notice =
            err.status === 422 ? `hint unavailable: ${err.message}` : err.message;
        } else {
          throw err;
        }
      }
    });
  }

  paletteColors(): number[] {
    if (!this.snapshot) return [];
    const k = Math.max(...this.snapshot.colors) + 1;
    return Array.from({ length: k }, (_, c) => c);
  }

  summary(): string {
    const s = this.snapshot;
    if (!s) return "no game";
    if (s.finished) {
      const opt = this.initialOptimal;
      const vs = opt === null ? "" : ` (optimal ${opt})`;
      return `finished in ${s.moves.length} moves${vs}`;
    }
    const rem = s.optimal_remaining;
    const tail = rem === null ? "" : `, optimal remaining ${rem}`;
    return `${s.moves.length} moves played${tail}`;
  }
}

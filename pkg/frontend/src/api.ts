// Typed client for the game service; all state lives server-side.

export interface Snapshot {
  id: string;
  vertices: number;
  colors: number[];
  edges: [number, number][];
  territory: number[];
  current_color: number;
  moves: number[];
  finished: boolean;
  optimal_remaining: number | null;
}

export interface Hint {
  color: number;
  optimal_remaining: number;
}

export interface GenSpec {
  family: "interval" | "permutation" | "rejection" | "grid";
  colors: number;
  seed: number;
  n?: number;
  rows?: number;
  cols?: number;
  proper?: boolean;
}

export type CreateBody =
  | { graph: { vertices: number; colors: number[]; edges: [number, number][]; source?: number }; source?: number }
  | { generate: GenSpec; source?: number };

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function parse(resp: Response): Promise<any> {
  const text = await resp.text();
  const body = text ? JSON.parse(text) : null;
  if (!resp.ok) {
    throw new ApiError(resp.status, body?.error ?? `HTTP ${resp.status}`);
  }
  return body;
}

export class GameApi {
  constructor(private baseUrl: string) {}

  async create(body: CreateBody): Promise<Snapshot> {
    const resp = await fetch(`${this.baseUrl}/games`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return parse(resp);
  }

  async get(id: string): Promise<Snapshot> {
    return parse(await fetch(`${this.baseUrl}/games/${id}`));
  }

  async move(id: string, color: number): Promise<Snapshot> {
    const resp = await fetch(`${this.baseUrl}/games/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ color }),
    });
    return parse(resp);
  }

  async hint(id: string): Promise<Hint> {
    return parse(await fetch(`${this.baseUrl}/games/${id}/hint`));
  }

  async remove(id: string): Promise<void> {
    const resp = await fetch(`${this.baseUrl}/games/${id}`, { method: "DELETE" });
    if (!resp.ok) {
      throw new ApiError(resp.status, `HTTP ${resp.status}`);
    }
  }
}

// Deterministic layouts. Grid games render as a matrix; general graphs
// get seeded positions (splitmix64, same stream as the backend) so a
// given instance always looks the same.

export interface Point {
  x: number;
  y: number;
}

const MASK = (1n << 64n) - 1n;

export class SplitMix64 {
  private state: bigint;

  constructor(seed: number | bigint) {
    this.state = BigInt(seed) & MASK;
  }

  next(): bigint {
    this.state = (this.state + 0x9e3779b97f4a7c15n) & MASK;
    let z = this.state;
    z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n) & MASK;
    z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK;
    return z ^ (z >> 31n);
  }

  below(bound: number): number {
    return Number(this.next() % BigInt(bound));
  }
}

export function gridCells(rows: number, cols: number): Point[] {
  const pts: Point[] = [];
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      pts.push({ x: c, y: r });
    }
  }
  return pts;
}

export function seededLayout(n: number, seed: number, size = 420): Point[] {
  const rng = new SplitMix64(seed);
  const cx = size / 2;
  const cy = size / 2;
  const radius = size * 0.38;
  const pts: Point[] = [];
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n;
    const jitterX = (rng.below(1000) / 1000 - 0.5) * size * 0.12;
    const jitterY = (rng.below(1000) / 1000 - 0.5) * size * 0.12;
    pts.push({
      x: cx + radius * Math.cos(angle) + jitterX,
      y: cy + radius * Math.sin(angle) + jitterY,
    });
  }
  return pts;
}

export const PALETTE = [
  "#e5484d",
  "#3e63dd",
  "#30a46c",
  "#ffb224",
  "#8e4ec6",
  "#12a594",
  "#e93d82",
  "#f76b15",
  "#7ce2fe",
  "#a18072",
];

export function colorSwatch(color: number): string {
  return PALETTE[color % PALETTE.length];
}

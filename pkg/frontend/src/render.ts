// DOM rendering: a colored matrix for grid games, positioned discs plus
// SVG edges for general graphs, a palette of swatches, hint overlay and
// notice line. The document is injected for testability.

import { GameModel } from "./model.js";
import { colorSwatch, gridCells, seededLayout } from "./layout.js";

export function render(model: GameModel, doc: Document): void {
  const board = doc.getElementById("board")!;
  const palette = doc.getElementById("palette")!;
  const status = doc.getElementById("status")!;
  const noticeEl = doc.getElementById("notice")!;
  board.innerHTML = "";
  palette.innerHTML = "";

  status.textContent = model.summary();
  noticeEl.textContent = model.notice ?? "";
  noticeEl.className = model.notice ? "notice active" : "notice";

  const snap = model.snapshot;
  if (!snap) return;
  const inTerritory = new Set(snap.territory);

  if (model.meta.kind === "grid" && model.meta.rows && model.meta.cols) {
    const { rows, cols } = model.meta;
    const table = doc.createElement("div");
    table.className = "grid";
    table.style.gridTemplateColumns = `repeat(${cols}, 34px)`;
    gridCells(rows, cols).forEach((_, v) => {
      const cell = doc.createElement("div");
      cell.className = inTerritory.has(v) ? "cell territory" : "cell";
      cell.dataset.vertex = String(v);
      const color = inTerritory.has(v) ? snap.current_color : snap.colors[v];
      cell.style.background = colorSwatch(color);
      table.appendChild(cell);
    });
    board.appendChild(table);
  } else {
    const size = 420;
    const pts = seededLayout(snap.vertices, model.meta.seed, size);
    const svgNS = "http://www.w3.org/2000/svg";
    const svg = doc.createElementNS(svgNS, "svg");
    svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
    svg.setAttribute("class", "graph");
    for (const [u, v] of snap.edges) {
      const line = doc.createElementNS(svgNS, "line");
      line.setAttribute("x1", String(pts[u].x));
      line.setAttribute("y1", String(pts[u].y));
      line.setAttribute("x2", String(pts[v].x));
      line.setAttribute("y2", String(pts[v].y));
      line.setAttribute("stroke", "#9994");
      svg.appendChild(line);
    }
    pts.forEach((p, v) => {
      const disc = doc.createElementNS(svgNS, "circle");
      disc.setAttribute("cx", String(p.x));
      disc.setAttribute("cy", String(p.y));
      disc.setAttribute("r", inTerritory.has(v) ? "14" : "10");
      const color = inTerritory.has(v) ? snap.current_color : snap.colors[v];
      disc.setAttribute("fill", colorSwatch(color));
      disc.setAttribute("data-vertex", String(v));
      if (inTerritory.has(v)) {
        disc.setAttribute("stroke", "#111");
        disc.setAttribute("stroke-width", "3");
      }
      svg.appendChild(disc);
    });
    board.appendChild(svg);
  }

  for (const c of model.paletteColors()) {
    const btn = doc.createElement("button");
    btn.className = "swatch";
    btn.dataset.color = String(c);
    btn.style.background = colorSwatch(c);
    btn.textContent = String(c);
    if (model.hint && model.hint.color === c) {
      btn.classList.add("hinted");
      btn.title = `hint: ${model.hint.remaining} moves remain`;
    }
    if (snap.finished || model.busy) {
      btn.disabled = true;
    }
    btn.addEventListener("click", () => {
      void model.clickColor(c);
    });
    palette.appendChild(btn);
  }
}

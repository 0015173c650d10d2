import { GameApi, GenSpec } from "./api.js";
import { BoardMeta, GameModel } from "./model.js";
import { render } from "./render.js";

const serviceUrl =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8000";

const api = new GameApi(serviceUrl);
const model = new GameModel(api);
model.onChange(() => render(model, document));

const form = document.getElementById("new-game") as HTMLFormElement;
form.addEventListener("submit", (ev) => {
  ev.preventDefault();
  const data = new FormData(form);
  const family = data.get("family") as GenSpec["family"];
  const colors = Number(data.get("colors"));
  const seed = Number(data.get("seed"));
  let spec: GenSpec;
  let meta: BoardMeta;
  if (family === "grid") {
    const rows = Number(data.get("rows"));
    const cols = Number(data.get("cols"));
    spec = { family, colors, seed, rows, cols };
    meta = { kind: "grid", rows, cols, seed };
  } else {
    spec = { family, colors, seed, n: Number(data.get("n")) };
    meta = { kind: "graph", seed };
  }
  void model.newGame({ generate: spec }, meta);
});

document.getElementById("hint-btn")!.addEventListener("click", () => {
  void model.requestHint();
});

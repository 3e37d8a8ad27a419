import init, {
  crystal_graph,
  partition_report,
  crystal_step,
  follow_label,
} from "./pkg/hstrict_demo.js";

const SVG = "http://www.w3.org/2000/svg";
const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"];
const ROW = 70;
const GAP = 16;

const $ = (id) => document.getElementById(id);

let graph = null;
let h = "3";
let selected = null;

function key(parts) {
  return parts.join(",");
}

function showError(e) {
  $("error").textContent = e ? String(e) : "";
}

function el(name, attrs, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

function layout(nodes) {
  const layers = new Map();
  for (const v of nodes) {
    if (!layers.has(v.degree)) layers.set(v.degree, []);
    layers.get(v.degree).push(v);
  }
  const pos = new Map();
  let width = 0;
  for (const layer of layers.values()) {
    let x = GAP;
    for (const v of layer) {
      const w = 12 + 7 * `[${key(v.partition)}]`.length;
      pos.set(key(v.partition), { x, y: GAP + v.degree * ROW, w });
      x += w + GAP;
    }
    width = Math.max(width, x);
  }
  for (const layer of layers.values()) {
    const last = pos.get(key(layer[layer.length - 1].partition));
    const shift = (width - (last.x + last.w + GAP)) / 2;
    for (const v of layer) pos.get(key(v.partition)).x += shift;
  }
  return { pos, width, height: GAP * 2 + layers.size * ROW };
}

function draw() {
  const box = $("graph");
  box.innerHTML = "";
  if (!graph) return;
  const { pos, width, height } = layout(graph.nodes);
  const svg = el("svg", { width, height }, box);
  for (const e of graph.edges) {
    const a = pos.get(key(e.from));
    const b = pos.get(key(e.to));
    const color = COLORS[e.label % COLORS.length];
    const x1 = a.x + a.w / 2, y1 = a.y + 20, x2 = b.x + b.w / 2, y2 = b.y;
    el("line", { x1, y1, x2, y2, class: "edge", stroke: color }, svg);
    const t = el("text", { x: (x1 + x2) / 2 + 3, y: (y1 + y2) / 2, class: "edge-label", fill: color }, svg);
    t.textContent = e.label;
  }
  for (const v of graph.nodes) {
    const p = pos.get(key(v.partition));
    const g = el("g", { class: `node ${v.type}`, transform: `translate(${p.x},${p.y})` }, svg);
    if (selected === key(v.partition)) g.classList.add("selected");
    el("rect", { width: p.w, height: 20, rx: 4 }, g);
    const t = el("text", { x: 6, y: 14 }, g);
    t.textContent = `[${key(v.partition)}]`;
    g.addEventListener("click", () => select(v.partition));
  }
}

function select(parts) {
  showError();
  if (parts === null) {
    selected = null;
    $("selected").textContent = "operator vanishes";
    $("report").textContent = "";
    draw();
    return;
  }
  selected = key(parts);
  $("selected").textContent = `[${selected}]`;
  try {
    const report = JSON.parse(partition_report(h, selected));
    $("report").textContent = JSON.stringify(report, null, 2);
  } catch (e) {
    $("report").textContent = "";
    showError(e);
  }
  draw();
}

function redraw() {
  showError();
  h = $("h").value.trim();
  try {
    graph = JSON.parse(crystal_graph(h, Number($("max-n").value)));
  } catch (e) {
    graph = null;
    showError(e);
  }
  draw();
}

function step(raise) {
  if (selected === null) {
    showError("select a vertex first");
    return;
  }
  try {
    select(JSON.parse(crystal_step(h, selected, Number($("residue").value), raise)));
  } catch (e) {
    showError(e);
  }
}

await init();

$("graph-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  selected = null;
  redraw();
});
$("apply-f").addEventListener("click", () => step(true));
$("apply-e").addEventListener("click", () => step(false));
$("label-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  try {
    select(JSON.parse(follow_label(h, $("word").value)));
  } catch (e) {
    showError(e);
  }
});

redraw();

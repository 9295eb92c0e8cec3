import init, { pascal_explorer, ideal_invariants, graph_regularity } from "./pkg/tspread_web_demo.js";

function show(id, compute, render) {
  const out = document.getElementById(id);
  try {
    out.textContent = render(JSON.parse(compute()));
    out.classList.remove("error");
  } catch (e) {
    out.textContent = String(e);
    out.classList.add("error");
  }
}

function lines(pairs) {
  return pairs.map(([k, v]) => `${k.padEnd(22)} ${v}`).join("\n");
}

const list = (xs) => (xs ? xs.join(", ") : "-");

function renderPascal(v) {
  const r = v.report;
  const tlex = r.tlex
    ? `(${list(r.tlex)})`
    : `none: shadow has ${r.tlex_witness.shadow_size} monomials, residue ${r.tlex_witness.residue}`;
  const text = lines([
    ["generators", list(r.generators)],
    ["total Betti numbers", list(r.total_betti)],
    ["pd(I), reg(I)", `${r.pd}, ${r.reg}`],
    ["f_t-vector", `(${list(r.ft_vector)})`],
    ["Hilbert series", v.hilbert],
    ["t-lex companion", tlex],
  ]);
  return v.diagram ? `${text}\n\nBetti diagram of S/I\n${v.diagram}` : text;
}

function renderIdeal(v) {
  const rows = [
    ["generators", list(v.generators)],
    ["support index", v.support_index],
    ["cosize", v.cosize],
    ["pd: bound, exact", `${v.pd_bound}, ${v.pd}`],
    ["reg: bound, exact", `${v.reg_bound}, ${v.reg}`],
    ["depth", v.depth],
    ["regular sequence", v.regular_sequence],
  ];
  if (v.tspread) {
    const t = v.tspread;
    rows.push([`${t.t}-spread`, t.is_t_spread]);
    rows.push(["f_t-vector", `(${list(t.ft_vector)})`]);
    if (t.reg_bound_degree !== null) rows.push(["t-spread reg bound", t.reg_bound_degree]);
  }
  return `${lines(rows)}\n\nBetti diagram of S/I\n${v.diagram}`;
}

function renderGraph(v) {
  return `${lines([
    ["edge ideal", list(v.generators)],
    ["induced matching", v.induced_matching_number],
    ["forest", v.is_forest],
    ["reg(I(G))", v.reg],
    ["floor(n/2) + 1", v.reg_bound_half],
  ])}\n\nBetti diagram of S/I(G)\n${v.diagram}`;
}

function bind(formId, handler) {
  const form = document.getElementById(formId);
  form.addEventListener("submit", (e) => {
    e.preventDefault();
    handler(new FormData(form));
  });
  handler(new FormData(form));
}

await init();

bind("pascal-form", (f) =>
  show("pascal-out", () => pascal_explorer(Number(f.get("n")), Number(f.get("t"))), renderPascal));
bind("ideal-form", (f) =>
  show("ideal-out", () => ideal_invariants(f.get("ideal"), Number(f.get("t"))), renderIdeal));
bind("graph-form", (f) =>
  show("graph-out", () => graph_regularity(f.get("graph")), renderGraph));

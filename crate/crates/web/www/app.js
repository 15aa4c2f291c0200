import init, { rs_tableaux, dyck_skew, bernstein_degrees } from "./pkg/gkmin_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, attrs = {}, children = []) {
  const e = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  for (const c of children) e.append(c);
  return e;
}

function show(target, result, render) {
  const out = $(target);
  out.replaceChildren();
  const data = JSON.parse(result);
  if (data.error) {
    out.append(el("p", { class: "error" }, [data.error]));
    return;
  }
  render(out, data);
}

function tableau(rows, caption) {
  const t = el("table", { class: "tableau" });
  t.append(el("caption", {}, [caption]));
  for (const row of rows) t.append(el("tr", {}, row.map((x) => el("td", {}, [String(x)]))));
  return t;
}

function runRs() {
  show("perm-out", rs_tableaux($("perm").value), (out, d) => {
    out.append(tableau(d.P, "P"), tableau(d.Q, "Q"));
    const note = d.in_two_column_cell
      ? `In the two-column cell; minimal element y_${d.minimal_index} = [${d.minimal_element}]`
      : `Shape [${d.shape.join(",")}] is not the two-column shape.`;
    out.append(el("p", { class: "verdict" }, [note]));
  });
}

function runDyck() {
  show("dyck-out", dyck_skew($("outer").value, $("inner").value), (out, d) => {
    const rows = d.outer.length;
    const cols = d.outer[0] || 0;
    const byCell = new Map(d.boxes.map((b) => [`${b.row},${b.col}`, b]));
    const grid = el("table", { class: "grid" });
    for (let i = 1; i <= rows; i++) {
      const tr = el("tr");
      for (let j = 1; j <= cols; j++) {
        const b = byCell.get(`${i},${j}`);
        if (b) {
          const hue = (b.layer * 67) % 360;
          tr.append(el("td", { style: `background:hsl(${hue},70%,85%)`, title: `layer ${b.layer}` }, [String(b.level)]));
        } else if (j <= d.outer[i - 1]) {
          tr.append(el("td", { class: "inner" }));
        } else {
          tr.append(el("td", { class: "empty" }));
        }
      }
      grid.append(tr);
    }
    out.append(grid);
    out.append(el("p", {}, [`${d.size} boxes, ${d.components} component(s), ${d.layers} strip layer(s); numbers are levels, colours are layers.`]));
    out.append(el("p", { class: "verdict" }, [d.dyck ? `Dyck, depth ${d.depth}` : `Not Dyck (depth ${d.depth})`]));
  });
}

function runBernstein() {
  show("bern-out", bernstein_degrees($("lambda").value), (out, d) => {
    const t = el("table", { class: "data" });
    t.append(el("tr", {}, ["k", "l", "c", "class", "GK dim"].map((h) => el("th", {}, [h]))));
    for (const b of d.bernstein) {
      t.append(el("tr", {}, [b.k, b.l, b.c, b.class ?? "", b.gk_dim ?? ""].map((x) => el("td", {}, [String(x)]))));
    }
    const f = el("table", { class: "data" });
    f.append(el("tr", {}, ["i \\ j", ...d.dim_F.map((_, j) => String(j + 1))].map((h) => el("th", {}, [h]))));
    d.dim_F.forEach((row, i) => f.append(el("tr", {}, [String(i + 1), ...row].map((x) => el("td", {}, [x])))));
    out.append(el("h3", {}, ["Minimal constituents"]), t, el("h3", {}, ["dim F"]), f);
    out.append(el("p", { class: "verdict" }, [d.degree_identity ? "Degrees sum to dim F in every entry." : "Degree identity FAILED."]));
  });
}

await init();
$("perm-go").onclick = runRs;
$("dyck-go").onclick = runDyck;
$("bern-go").onclick = runBernstein;
runRs();
runDyck();
runBernstein();

import init, { build, examples, hom } from "../pkg/wilddiag_web.js";

const $ = (id) => document.getElementById(id);

function showError(target, err) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err);
  target.appendChild(p);
}

function runBuild() {
  try {
    const out = JSON.parse(build($("source").value));
    $("drawing").innerHTML = out.svg;
    $("report").textContent = out.text;
  } catch (err) {
    $("drawing").innerHTML = "";
    showError($("report"), err);
  }
}

function cell(row, text, tag = "td") {
  const el = document.createElement(tag);
  el.textContent = text;
  row.appendChild(el);
}

function runHom() {
  const target = $("hom-out");
  try {
    const out = JSON.parse(hom($("hom-a").value, $("hom-b").value));
    target.innerHTML = "";
    const summary = document.createElement("p");
    summary.textContent =
      `${out.a.circle} (ram ${out.a.ram}, slope ${out.a.slope}) against ` +
      `${out.b.circle} (ram ${out.b.ram}, slope ${out.b.slope}): rank ${out.rank}, Irr ${out.irr}`;
    target.appendChild(summary);
    const table = document.createElement("table");
    const head = table.insertRow();
    ["circle", "multiplicity", "ram", "slope"].forEach((h) => cell(head, h, "th"));
    for (const e of out.hom) {
      const row = table.insertRow();
      [e.circle, e.mult, e.ram, e.slope].forEach((v) => cell(row, v));
    }
    target.appendChild(table);
  } catch (err) {
    showError(target, err);
  }
}

async function main() {
  await init();
  const list = JSON.parse(examples());
  const select = $("example");
  for (const e of list) {
    const opt = document.createElement("option");
    opt.value = e.name;
    opt.textContent = `${e.name}: ${e.title}`;
    select.appendChild(opt);
  }
  const load = () => {
    $("source").value = list.find((e) => e.name === select.value).source;
    runBuild();
  };
  select.addEventListener("change", load);
  $("build").addEventListener("click", runBuild);
  $("hom").addEventListener("click", runHom);
  select.value = "p3";
  load();
  runHom();
}

main();

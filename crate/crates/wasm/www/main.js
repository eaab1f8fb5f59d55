import init, { analyze_source, random_diagram, form_signature } from "./pkg/surfalt_wasm.js";

const $ = (id) => document.getElementById(id);

function show(out, fn) {
  out.classList.remove("error");
  try {
    return fn();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e.message ?? e);
    return null;
  }
}

function summarize(report) {
  const yn = (v) => (v === null ? "n/a" : v ? "yes" : "no");
  const parts = [`genus ${report.genus}`, `${report.components} component(s)`];
  if (report.colorable) {
    parts.push(`signatures W ${report.signature_white}, B ${report.signature_black}`);
  } else {
    parts.push("not checkerboard colorable");
  }
  parts.push(`alternating by definiteness: ${yn(report.alternating_by_definiteness)}`);
  parts.push(`minimal genus certified: ${yn(report.minimal_genus_certified)}`);
  return parts.join("; ");
}

function analyze() {
  const out = $("analyze-out");
  $("analyze-summary").textContent = "";
  const json = show(out, () => analyze_source($("source").value));
  if (json !== null) {
    out.textContent = json;
    $("analyze-summary").textContent = summarize(JSON.parse(json));
  }
}

await init();

$("analyze").addEventListener("click", analyze);
$("random").addEventListener("click", () => {
  const text = show($("analyze-out"), () =>
    random_diagram(Number($("crossings").value), BigInt($("seed").value), $("alternating").checked),
  );
  if (text !== null) {
    $("source").value = text;
    analyze();
  }
});
$("signature").addEventListener("click", () => {
  const out = $("signature-out");
  const json = show(out, () => form_signature($("matrix").value));
  if (json !== null) out.textContent = json;
});

analyze();

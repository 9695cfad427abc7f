import init, { infer, validate, closure } from "./pkg/skosforge_web.js";

const SKOS = "http://www.w3.org/2004/02/skos/core#";
const XL = "http://www.w3.org/2008/05/skos-xl#";
const EX = "http://example.org/";

const EXAMPLES = {
  love: [
    `<${EX}love> <${XL}prefLabel> <${EX}love_label> .`,
    `<${EX}love_label> <${XL}literalForm> "love"@en .`,
  ],
  hierarchy: [
    `<${EX}animals> <${SKOS}prefLabel> "animals"@en .`,
    `<${EX}mammals> <${SKOS}broader> <${EX}animals> .`,
    `<${EX}mammals> <${SKOS}prefLabel> "mammals"@en .`,
    `<${EX}cats> <${SKOS}broader> <${EX}mammals> .`,
    `<${EX}cats> <${SKOS}prefLabel> "cats"@en .`,
    `<${EX}cats> <${SKOS}prefLabel> "felines"@en .`,
    `<${EX}cats> <${SKOS}related> <${EX}animals> .`,
    `<${EX}dogs> <${SKOS}broader> <${EX}mammals> .`,
    `<${EX}dogs> <${SKOS}altLabel> "hounds"@en .`,
  ],
};

const $ = (id) => document.getElementById(id);
const source = $("source");
const summary = $("summary");
const result = $("result");

function el(tag, attrs = {}, ...children) {
  const node = document.createElement(tag);
  Object.assign(node, attrs);
  node.append(...children);
  return node;
}

function show(text, ...nodes) {
  summary.textContent = text;
  result.replaceChildren(...nodes);
}

function guarded(fn) {
  return () => {
    try {
      fn();
    } catch (e) {
      show("", el("p", { className: "error", textContent: String(e) }));
    }
  };
}

function table(headers, rows) {
  const head = el("tr", {}, ...headers.map((h) => el("th", { textContent: h })));
  return el("table", {}, el("thead", {}, head), el("tbody", {}, ...rows));
}

function runInfer() {
  const out = JSON.parse(infer(source.value, $("profile").value));
  const summaryText = `${out.asserted} asserted, ${out.derived} derived triples`;
  if ($("only-derived").checked) {
    const rows = out.trace.map((s) =>
      el("tr", {},
        el("td", { textContent: s.axiom }),
        el("td", { className: "mono", textContent: s.derived }),
        el("td", { className: "mono", textContent: s.premises.join("\n") })));
    show(summaryText, table(["axiom", "derived triple", "from"], rows));
  } else {
    show(summaryText, el("pre", { textContent: out.ntriples }));
  }
}

function runValidate() {
  const report = JSON.parse(validate(source.value));
  const errors = report.findings.filter((f) => f.severity === "error").length;
  const rows = report.findings.map((f) =>
    el("tr", {},
      el("td", { className: f.severity, textContent: f.severity.toUpperCase() }),
      el("td", { textContent: f.rule }),
      el("td", { className: "mono", textContent: f.focus }),
      el("td", { textContent: f.message })));
  show(`${errors} errors, ${report.findings.length - errors} warnings`,
    rows.length ? table(["severity", "rule", "focus", "message"], rows) : el("p", { textContent: "No findings." }));
}

function runClosure() {
  const out = JSON.parse(closure(source.value, $("concept").value));
  const list = (items) => el("ul", {}, ...items.map((t) => el("li", { className: "mono", textContent: t })));
  show(`${out.concept}${out.cyclic ? " (on a cycle)" : ""}`,
    el("h3", { textContent: `broader (${out.broader.length})` }), list(out.broader),
    el("h3", { textContent: `narrower (${out.narrower.length})` }), list(out.narrower));
}

await init();
source.value = EXAMPLES.hierarchy.join("\n") + "\n";
$("concept").value = `${EX}cats`;
$("load-love").onclick = () => { source.value = EXAMPLES.love.join("\n") + "\n"; };
$("load-hierarchy").onclick = () => { source.value = EXAMPLES.hierarchy.join("\n") + "\n"; };
$("infer").onclick = guarded(runInfer);
$("validate").onclick = guarded(runValidate);
$("closure").onclick = guarded(runClosure);

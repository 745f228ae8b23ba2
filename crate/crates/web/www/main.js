import init, { curve_cone, graph_volume, counterexample_table } from "./pkg/singvol_web.js";

const $ = (id) => document.getElementById(id);

function escape(s) {
  return String(s).replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" }[c]));
}

function showError(target, value) {
  target.innerHTML = `<p class="error">${escape(value.reason)}: ${escape(value.error)}</p>`;
}

function plot(canvas, points, { logY = false, label = "" } = {}) {
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 36;
  ctx.clearRect(0, 0, w, h);
  const ys = points.map((p) => (logY ? Math.log2(Math.max(p.y, 1e-300)) : p.y));
  const xs = points.map((p) => p.x);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(...ys, logY ? Infinity : 0), Math.max(...ys)];
  if (y0 === y1) y1 = y0 + 1;
  const sx = (x) => pad + ((x - x0) / (x1 - x0 || 1)) * (w - 2 * pad);
  const sy = (y) => h - pad - ((y - y0) / (y1 - y0)) * (h - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2); ctx.lineTo(pad, h - pad); ctx.lineTo(w - pad / 2, h - pad);
  ctx.stroke();
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  ctx.fillText(label, pad + 4, pad / 2 + 10);
  ctx.fillText(String(x0), sx(x0) - 3, h - pad + 14);
  ctx.fillText(String(x1), sx(x1) - 6, h - pad + 14);
  ctx.fillText((logY ? "2^" : "") + y1.toFixed(logY ? 0 : 2), 2, sy(y1) + 4);
  ctx.fillText((logY ? "2^" : "") + y0.toFixed(logY ? 0 : 2), 2, sy(y0));
  ctx.strokeStyle = "#1f5fa8";
  ctx.fillStyle = "#1f5fa8";
  ctx.beginPath();
  points.forEach((p, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, sx(xs[i]), sy(ys[i])));
  ctx.stroke();
  points.forEach((p, i) => ctx.fillRect(sx(xs[i]) - 2, sy(ys[i]) - 2, 4, 4));
}

function runCurveCone() {
  const out = $("cc-out");
  const v = JSON.parse(curve_cone(+$("cc-genus").value, +$("cc-degree").value, +$("cc-dmax").value));
  if (v.error) return showError(out, v);
  out.innerHTML =
    `<p>volume = <b>${escape(v.volume)}</b> (closed form ${escape(v.closed_form)}), ` +
    `log canonical: ${v.is_lc}, lc boundary exists: ${escape(v.lc_boundary.exists)}</p>`;
  plot($("cc-plot"), v.series.map((s) => ({ x: s.d, y: s.approx })), { label: "volume vs degree" });
}

function runGraphVolume() {
  const out = $("gv-out");
  const v = JSON.parse(graph_volume($("gv-src").value));
  if (v.error) return showError(out, v);
  const rows = v.P.map((p, i) =>
    `<tr><td>${escape(p.id)}</td><td>${escape(v.b[i].value)}</td><td>${escape(v.log_discrepancy[i].value)}</td>` +
    `<td>${escape(p.value)}</td><td>${escape(v.N[i].value)}</td></tr>`).join("");
  out.innerHTML =
    `<p>volume = <b>${escape(v.volume)}</b>, log canonical: ${v.is_lc}, ` +
    `negative part support: [${v.active.map(escape).join(", ")}]</p>` +
    `<table><tr><th>vertex</th><th>b</th><th>log discrepancy</th><th>P</th><th>N</th></tr>${rows}</table>`;
}

function runCounterexample() {
  const out = $("ce-out");
  const v = JSON.parse(counterexample_table($("ce-x").value, $("ce-y").value, +$("ce-k").value));
  if (v.error) return showError(out, v);
  const rows = v.rows.map((r) =>
    `<tr><td>${escape(r.a)}</td><td>${escape(r.bound)}</td><td>${escape(r.running_min)}</td></tr>`).join("");
  const verdicts = v.verdicts.map((d) => `<li>${escape(d.statement)} <i>(${escape(d.label)})</i></li>`).join("");
  out.innerHTML =
    `<p>H&sup2; = ${escape(v.H_squared)}; lc boundary exists: <b>${escape(v.lc_boundary.exists)}</b></p>` +
    `<ul>${verdicts}</ul>` +
    `<table><tr><th>a</th><th>upper bound</th><th>running min</th></tr>${rows}</table>`;
  plot($("ce-plot"), v.rows.map((r, k) => ({ x: k, y: v.approx_bounds[k] })),
    { logY: true, label: "log2 of the bound vs k (a = 2^-k)" });
}

init().then(() => {
  $("status").textContent = "";
  $("cc-run").onclick = runCurveCone;
  $("gv-run").onclick = runGraphVolume;
  $("ce-run").onclick = runCounterexample;
  runCurveCone();
  runGraphVolume();
  runCounterexample();
}).catch((e) => {
  $("status").innerHTML = `<span class="error">Could not load the module: ${escape(e)}</span>`;
});

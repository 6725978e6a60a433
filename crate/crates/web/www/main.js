import init, { constAdd, qftMatrix, gateCounts } from "./pkg/fourier_adder_web.js";

const $ = (id) => document.getElementById(id);

function hue(phase) {
  const deg = ((phase / (2 * Math.PI)) * 360 + 360) % 360;
  return `hsl(${deg}, 70%, 50%)`;
}

function drawAdd() {
  const canvas = $("add-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let result;
  try {
    result = JSON.parse(constAdd(+$("add-n").value, +$("add-c").value, $("add-values").value));
  } catch (e) {
    $("add-info").textContent = String(e);
    $("add-info").className = "err";
    return;
  }
  const dim = result.before.length;
  const slot = canvas.width / dim;
  const base = canvas.height - 20;
  const height = base - 10;
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  for (let j = 0; j < dim; j++) {
    const [br, bi] = result.before[j];
    const [ar, ai] = result.after[j];
    const pb = br * br + bi * bi;
    const pa = ar * ar + ai * ai;
    ctx.fillStyle = "#bbb";
    ctx.fillRect(j * slot + slot * 0.1, base - pb * height, slot * 0.38, pb * height);
    ctx.fillStyle = pa > 1e-12 ? hue(Math.atan2(ai, ar)) : "#36c";
    ctx.fillRect(j * slot + slot * 0.52, base - pa * height, slot * 0.38, pa * height);
    if (dim <= 64 || j % 8 === 0) {
      ctx.fillStyle = "#444";
      ctx.fillText(String(j), j * slot + slot / 2, canvas.height - 5);
    }
  }
  $("add-info").className = "note";
  $("add-info").textContent =
    `c = ${result.constant} ≡ ${result.canonical_constant} (mod ${dim}), ${result.gate_total} gates in the circuit`;
}

function drawQft() {
  const n = +$("qft-n").value;
  $("qft-n-label").textContent = n;
  const view = JSON.parse(qftMatrix(n));
  const canvas = $("qft-canvas");
  const ctx = canvas.getContext("2d");
  const dim = view.phases.length;
  const cell = canvas.width / dim;
  for (let j = 0; j < dim; j++) {
    for (let k = 0; k < dim; k++) {
      ctx.fillStyle = hue(view.phases[j][k]);
      ctx.fillRect(k * cell, j * cell, cell, cell);
    }
  }
  $("qft-info").textContent =
    `max |circuit − DFT| = ${view.max_error.toExponential(2)}, every |entry| = ${view.magnitudes[0][0].toFixed(4)}`;
}

function drawCounts() {
  let rows;
  try {
    rows = JSON.parse(gateCounts(+$("counts-n").value));
  } catch (e) {
    $("counts-table").innerHTML = `<p class="err">${e}</p>`;
    return;
  }
  const body = rows
    .map((r) => `<tr><td>${r.N}</td><td>${r.T_const}</td><td>${r.T_draper_inner}</td><td>${r.swaps}</td></tr>`)
    .join("");
  $("counts-table").innerHTML =
    "<table><tr><th>N</th><th>constant adder ops</th><th>Draper inner controlled ops</th><th>swaps per QFT</th></tr>" +
    body + "</table>";
}

await init();
for (const id of ["add-n", "add-c", "add-values"]) $(id).addEventListener("input", drawAdd);
$("qft-n").addEventListener("input", drawQft);
$("counts-n").addEventListener("input", drawCounts);
drawAdd();
drawQft();
drawCounts();

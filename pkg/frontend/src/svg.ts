/**
 * Minimal deterministic SVG line charts.
 *
 * No DOM, no canvas: the chart is assembled as a string, so rendering is a
 * pure function of the input data and identical inputs give identical
 * bytes.
 */

export interface Series {
  label: string;
  x: number[];
  y: number[];
  dash?: string;
}

export interface ChartOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  xLog?: boolean;
  /** horizontal reference line, e.g. 1 for normalized quantities */
  refY?: number;
  /** vertical guide, e.g. the characteristic scale t = 1 */
  guideX?: number;
  width?: number;
  height?: number;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const MARGIN = { left: 64, right: 16, top: 34, bottom: 46 };

function fmt(v: number): string {
  if (!Number.isFinite(v)) {
    throw new Error(`non-finite coordinate: ${v}`);
  }
  return Number(v.toPrecision(6)).toString();
}

function tickLabel(v: number): string {
  const a = Math.abs(v);
  if (a !== 0 && (a < 1e-3 || a >= 1e4)) {
    return v.toExponential(0).replace("e+", "e");
  }
  return Number(v.toPrecision(4)).toString();
}

function linearTicks(lo: number, hi: number, count = 5): number[] {
  const span = hi - lo;
  if (span <= 0) {
    return [lo];
  }
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const candidates = [step, 2 * step, 2.5 * step, 5 * step, 10 * step];
  const chosen = candidates.find((s) => span / s <= count + 1) ?? 10 * step;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / chosen) * chosen; v <= hi + 1e-12 * span; v += chosen) {
    ticks.push(Math.abs(v) < 1e-12 * span ? 0 : v);
  }
  return ticks;
}

function decadeTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let k = Math.ceil(Math.log10(lo) - 1e-9); Math.pow(10, k) <= hi * (1 + 1e-9); k++) {
    ticks.push(Math.pow(10, k));
  }
  return ticks;
}

export function renderLineChart(options: ChartOptions): string {
  const width = options.width ?? 640;
  const height = options.height ?? 440;
  const xLog = options.xLog ?? true;
  if (options.series.length === 0) {
    throw new Error("chart needs at least one series");
  }
  for (const s of options.series) {
    if (s.x.length !== s.y.length || s.x.length === 0) {
      throw new Error(`series ${s.label}: empty or mismatched coordinates`);
    }
    if (xLog && s.x.some((v) => v <= 0)) {
      throw new Error(`series ${s.label}: log axis requires positive x`);
    }
  }

  const xs = options.series.flatMap((s) => s.x);
  const ys = options.series.flatMap((s) => s.y).concat(
    options.refY !== undefined ? [options.refY] : []);
  let xMin = Math.min(...xs);
  let xMax = Math.max(...xs);
  let yMin = Math.min(...ys);
  let yMax = Math.max(...ys);
  if (xMax === xMin) {
    xMax = xMin * (xLog ? 10 : 1) + (xLog ? 0 : 1);
  }
  const pad = (yMax - yMin || Math.abs(yMax) || 1) * 0.06;
  yMin -= pad;
  yMax += pad;

  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const xPos = (v: number) => {
    const f = xLog
      ? (Math.log10(v) - Math.log10(xMin)) / (Math.log10(xMax) - Math.log10(xMin))
      : (v - xMin) / (xMax - xMin);
    return MARGIN.left + f * plotW;
  };
  const yPos = (v: number) => MARGIN.top + (1 - (v - yMin) / (yMax - yMin)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${fmt(plotW)}" ` +
      `height="${fmt(plotH)}" fill="none" stroke="#333"/>`,
  );
  parts.push(
    `<text x="${fmt(width / 2)}" y="18" text-anchor="middle" font-size="14">` +
      `${options.title}</text>`,
  );

  const xTicks = (xLog ? decadeTicks(xMin, xMax) : linearTicks(xMin, xMax))
    .filter((v) => v >= xMin * (1 - 1e-9) && v <= xMax * (1 + 1e-9));
  for (const v of xTicks) {
    const x = fmt(xPos(v));
    parts.push(`<line x1="${x}" y1="${fmt(yPos(yMin))}" x2="${x}" ` +
      `y2="${fmt(yPos(yMin) + 5)}" stroke="#333"/>`);
    parts.push(`<text x="${x}" y="${fmt(yPos(yMin) + 18)}" text-anchor="middle">` +
      `${tickLabel(v)}</text>`);
  }
  for (const v of linearTicks(yMin, yMax)) {
    const y = fmt(yPos(v));
    parts.push(`<line x1="${MARGIN.left - 5}" y1="${y}" x2="${MARGIN.left}" ` +
      `y2="${y}" stroke="#333"/>`);
    parts.push(`<text x="${MARGIN.left - 8}" y="${y}" dy="4" text-anchor="end">` +
      `${tickLabel(v)}</text>`);
  }
  parts.push(
    `<text x="${fmt(MARGIN.left + plotW / 2)}" y="${height - 8}" ` +
      `text-anchor="middle">${options.xLabel}</text>`,
  );
  parts.push(
    `<text x="16" y="${fmt(MARGIN.top + plotH / 2)}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${fmt(MARGIN.top + plotH / 2)})">` +
      `${options.yLabel}</text>`,
  );

  if (options.guideX !== undefined && options.guideX > xMin && options.guideX < xMax) {
    const x = fmt(xPos(options.guideX));
    parts.push(`<line x1="${x}" y1="${fmt(MARGIN.top)}" x2="${x}" ` +
      `y2="${fmt(MARGIN.top + plotH)}" stroke="#bbb" stroke-dasharray="2,3"/>`);
  }
  if (options.refY !== undefined && options.refY > yMin && options.refY < yMax) {
    const y = fmt(yPos(options.refY));
    parts.push(`<line x1="${MARGIN.left}" y1="${y}" ` +
      `x2="${fmt(MARGIN.left + plotW)}" y2="${y}" stroke="#999" ` +
      `stroke-dasharray="5,4"/>`);
  }

  options.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const points = s.x.map((v, j) => `${fmt(xPos(v))},${fmt(yPos(s.y[j]))}`).join(" ");
    const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
    parts.push(`<polyline points="${points}" fill="none" stroke="${color}" ` +
      `stroke-width="1.6"${dash}/>`);
  });

  options.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const y = MARGIN.top + 14 + 16 * i;
    const x = MARGIN.left + plotW - 150;
    const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
    parts.push(`<line x1="${fmt(x)}" y1="${fmt(y - 4)}" x2="${fmt(x + 26)}" ` +
      `y2="${fmt(y - 4)}" stroke="${color}" stroke-width="1.6"${dash}/>`);
    parts.push(`<text x="${fmt(x + 32)}" y="${fmt(y)}">${s.label}</text>`);
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

import type { BenchRow } from "./csv.js";
import { findCrossovers, groupSeries, type Crossover, type Series } from "./crossover.js";

/** Fixed colors for the three stock algorithms. */
export const SERIES_COLORS: Record<string, string> = {
  poly_index: "#d62728",
  karatsuba: "#ff7f0e",
  ntt: "#2ca02c",
};

// Anything outside the stock trio gets a color by first-appearance order.
const EXTRA_COLORS = ["#1f77b4", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"];

export function seriesColor(algorithm: string, index: number): string {
  return SERIES_COLORS[algorithm] ?? EXTRA_COLORS[index % EXTRA_COLORS.length]!;
}

export interface RenderOptions {
  minBits?: number;
  maxBits?: number;
  /** Plain axes instead of the default log-log view. */
  linear?: boolean;
}

export interface ChartResult {
  svg: string;
  seriesNames: string[];
  pointCount: number;
  crossovers: Crossover[];
}

export class EmptyPlotError extends Error {}

const WIDTH = 960;
const HEIGHT = 560;
const MARGIN = { top: 66, right: 212, bottom: 62, left: 86 };
const INNER_W = WIDTH - MARGIN.left - MARGIN.right;
const INNER_H = HEIGHT - MARGIN.top - MARGIN.bottom;

const escapeXml = (s: string): string =>
  s.replace(/[<>&"']/g, (c) =>
    ({ "<": "&lt;", ">": "&gt;", "&": "&amp;", '"': "&quot;", "'": "&apos;" })[c]!,
  );

const fmt = (v: number): string => v.toFixed(2);

// Trim float noise off linear tick labels; 17203.2 -> "17200".
const fmtTick = (v: number): string => Number(v.toPrecision(3)).toString();

interface Tick {
  value: number;
  label: string;
}

interface Scale {
  pos: (value: number) => number;
  ticks: Tick[];
}

function logScale(
  values: number[],
  base: 2 | 10,
  span: number,
  offset: number,
  flip: boolean,
): Scale {
  const tr = base === 2 ? Math.log2 : Math.log10;
  let lo = Math.floor(Math.min(...values.map(tr)));
  let hi = Math.ceil(Math.max(...values.map(tr)));
  if (lo === hi) {
    // A single measured size still deserves a readable axis around it.
    lo -= 1;
    hi += 1;
  }
  const step = Math.max(1, Math.ceil((hi - lo) / (base === 2 ? 16 : 8)));
  const ticks: Tick[] = [];
  for (let k = lo; k <= hi; k += step) {
    ticks.push({ value: base ** k, label: base === 2 ? `2^${k}` : `1e${k}` });
  }
  const pos = (value: number): number => {
    const t = (tr(value) - lo) / (hi - lo);
    return offset + (flip ? 1 - t : t) * span;
  };
  return { pos, ticks };
}

function linearScale(values: number[], span: number, offset: number, flip: boolean): Scale {
  const hi = Math.max(...values) * 1.05;
  const ticks: Tick[] = [];
  for (let i = 0; i <= 5; i++) {
    const value = (hi * i) / 5;
    ticks.push({ value, label: fmtTick(value) });
  }
  const pos = (value: number): number => {
    const t = value / hi;
    return offset + (flip ? 1 - t : t) * span;
  };
  return { pos, ticks };
}

function describeFilter(options: RenderOptions): string {
  const parts: string[] = [];
  if (options.minBits !== undefined) parts.push(`min ${options.minBits}`);
  if (options.maxBits !== undefined) parts.push(`max ${options.maxBits}`);
  return parts.length ? ` (bit-range filter: ${parts.join(", ")})` : "";
}

/**
 * Render benchmark rows as a standalone SVG chart.
 *
 * One series per algorithm, operand bits along x, median seconds along y,
 * log-log unless options.linear is set. Every lasting change of lead between
 * two series is marked with a dashed rule and a ring on the winning point.
 * The output is a pure function of rows and options, so byte-identical
 * inputs give byte-identical images.
 */
export function renderChart(rows: BenchRow[], options: RenderOptions = {}): ChartResult {
  const { minBits, maxBits, linear = false } = options;
  const kept = rows.filter(
    (r) =>
      (minBits === undefined || r.bits >= minBits) &&
      (maxBits === undefined || r.bits <= maxBits),
  );
  if (kept.length === 0) {
    throw new EmptyPlotError(`no rows to plot${describeFilter(options)}`);
  }
  const series = groupSeries(kept);
  const crossovers = findCrossovers(series);

  const bits = kept.map((r) => r.bits);
  const seconds = kept.map((r) => r.medianSeconds);
  const x = linear
    ? linearScale(bits, INNER_W, MARGIN.left, false)
    : logScale(bits, 2, INNER_W, MARGIN.left, false);
  const y = linear
    ? linearScale(seconds, INNER_H, MARGIN.top, true)
    : logScale(seconds, 10, INNER_H, MARGIN.top, true);

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    `  <style>`,
    `    text { font-family: 'Segoe UI', 'Helvetica Neue', Arial, sans-serif; font-size: 12px; fill: #24292f; }`,
    `    .title { font-size: 17px; font-weight: 600; }`,
    `    .subtitle { font-size: 12px; fill: #57606a; }`,
    `    .axis-label { font-size: 13px; fill: #57606a; }`,
    `    .note { font-size: 11px; fill: #57606a; }`,
    `  </style>`,
    `  <rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`,
    `  <text class="title" x="${MARGIN.left}" y="28">big-number multiplication timing</text>`,
    `  <text class="subtitle" x="${MARGIN.left}" y="46">median seconds per product, ${linear ? "linear" : "log-log"} axes</text>`,
  );

  // Grid and axes.
  for (const tick of x.ticks) {
    const px = fmt(x.pos(tick.value));
    out.push(
      `  <line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${MARGIN.top + INNER_H}" stroke="#eaecef"/>`,
      `  <text x="${px}" y="${MARGIN.top + INNER_H + 18}" text-anchor="middle">${tick.label}</text>`,
    );
  }
  for (const tick of y.ticks) {
    const py = fmt(y.pos(tick.value));
    out.push(
      `  <line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + INNER_W}" y2="${py}" stroke="#eaecef"/>`,
      `  <text x="${MARGIN.left - 8}" y="${py}" text-anchor="end" dy="0.32em">${tick.label}</text>`,
    );
  }
  out.push(
    `  <line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${MARGIN.top + INNER_H}" stroke="#8c959f"/>`,
    `  <line x1="${MARGIN.left}" y1="${MARGIN.top + INNER_H}" x2="${MARGIN.left + INNER_W}" y2="${MARGIN.top + INNER_H}" stroke="#8c959f"/>`,
    `  <text class="axis-label" x="${MARGIN.left + INNER_W / 2}" y="${HEIGHT - 16}" text-anchor="middle">operand bits</text>`,
    `  <text class="axis-label" x="24" y="${MARGIN.top + INNER_H / 2}" text-anchor="middle" transform="rotate(-90 24 ${MARGIN.top + INNER_H / 2})">median seconds</text>`,
  );

  // Crossover rules go under the data, rings on top of it.
  const lookup = new Map(series.map((s) => [s.algorithm, new Map(s.points.map((p) => [p.bits, p.seconds]))]));
  crossovers.forEach((c, i) => {
    const px = x.pos(c.bits);
    const labelY = MARGIN.top + 16 + i * 16;
    const anchorEnd = px > MARGIN.left + INNER_W * 0.6;
    out.push(
      `  <line x1="${fmt(px)}" y1="${MARGIN.top}" x2="${fmt(px)}" y2="${MARGIN.top + INNER_H}" stroke="#6e7781" stroke-dasharray="4 3"/>`,
      `  <text class="note" x="${fmt(anchorEnd ? px - 6 : px + 6)}" y="${labelY}" text-anchor="${anchorEnd ? "end" : "start"}">${escapeXml(c.faster)} overtakes ${escapeXml(c.slower)} at ${c.bits} bits</text>`,
    );
  });

  series.forEach((s, i) => {
    const color = seriesColor(s.algorithm, i);
    if (s.points.length > 1) {
      const pts = s.points
        .map((p) => `${fmt(x.pos(p.bits))},${fmt(y.pos(p.seconds))}`)
        .join(" ");
      out.push(`  <polyline points="${pts}" fill="none" stroke="${color}" stroke-width="2"/>`);
    }
    for (const p of s.points) {
      out.push(
        `  <circle cx="${fmt(x.pos(p.bits))}" cy="${fmt(y.pos(p.seconds))}" r="3.5" fill="${color}"/>`,
      );
    }
  });

  for (const c of crossovers) {
    const winner = lookup.get(c.faster)?.get(c.bits);
    if (winner === undefined) continue;
    out.push(
      `  <circle cx="${fmt(x.pos(c.bits))}" cy="${fmt(y.pos(winner))}" r="6.5" fill="none" stroke="#24292f" stroke-width="1.5"/>`,
    );
  }

  // Legend.
  const legendX = MARGIN.left + INNER_W + 24;
  series.forEach((s, i) => {
    const color = seriesColor(s.algorithm, i);
    const rowY = MARGIN.top + 12 + i * 24;
    out.push(
      `  <line x1="${legendX}" y1="${rowY}" x2="${legendX + 26}" y2="${rowY}" stroke="${color}" stroke-width="2.5"/>`,
      `  <circle cx="${legendX + 13}" cy="${rowY}" r="3.5" fill="${color}"/>`,
      `  <text x="${legendX + 34}" y="${rowY}" dy="0.32em">${escapeXml(s.algorithm)}</text>`,
    );
  });
  out.push(`</svg>`, ``);

  return {
    svg: out.join("\n"),
    seriesNames: series.map((s: Series) => s.algorithm),
    pointCount: kept.length,
    crossovers,
  };
}

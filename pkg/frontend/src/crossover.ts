import type { BenchRow } from "./csv.js";

export interface SeriesPoint {
  bits: number;
  seconds: number;
}

export interface Series {
  algorithm: string;
  points: SeriesPoint[];
}

export interface Crossover {
  /** Algorithm that loses the lead. */
  slower: string;
  /** Algorithm that takes it. */
  faster: string;
  /** Smallest shared operand size where the lead change holds for good. */
  bits: number;
}

/** Group rows into one series per algorithm, points sorted by operand size. */
export function groupSeries(rows: BenchRow[]): Series[] {
  // First-appearance order; identical input must give an identical legend.
  const order: string[] = [];
  const byName = new Map<string, Map<number, number>>();
  for (const row of rows) {
    let points = byName.get(row.algorithm);
    if (points === undefined) {
      points = new Map();
      byName.set(row.algorithm, points);
      order.push(row.algorithm);
    }
    points.set(row.bits, row.medianSeconds);
  }
  return order.map((algorithm) => ({
    algorithm,
    points: [...byName.get(algorithm)!]
      .map(([bits, seconds]) => ({ bits, seconds }))
      .sort((a, b) => a.bits - b.bits),
  }));
}

/**
 * Find lead changes between every ordered pair of series.
 *
 * An overtake only counts if it sticks: the faster algorithm must win
 * strictly at the reported size and at every larger size both series were
 * measured on. Ties never flip the lead. Pairs sharing fewer than two sizes
 * are skipped; one point cannot show a change of lead.
 */
export function findCrossovers(series: Series[]): Crossover[] {
  const found: Crossover[] = [];
  for (const a of series) {
    const timesA = new Map(a.points.map((p) => [p.bits, p.seconds]));
    for (const b of series) {
      if (a === b) continue;
      const shared = b.points.filter((p) => timesA.has(p.bits));
      if (shared.length < 2) continue;
      let bits: number | null = null;
      for (let i = shared.length - 1; i >= 0; i--) {
        const point = shared[i]!;
        if (point.seconds < timesA.get(point.bits)!) {
          bits = point.bits;
        } else {
          break;
        }
      }
      if (bits !== null) {
        found.push({ slower: a.algorithm, faster: b.algorithm, bits });
      }
    }
  }
  return found.sort(
    (u, v) =>
      u.bits - v.bits ||
      u.faster.localeCompare(v.faster) ||
      u.slower.localeCompare(v.slower),
  );
}

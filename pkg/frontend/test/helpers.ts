import { CSV_HEADER, type BenchRow } from "../src/csv.js";

export function csvLine(
  algorithm: string,
  bits: number,
  median: number | string,
  seed = 7,
): string {
  return `${algorithm},${bits},${median},3,true,${seed},false`;
}

export function makeCsv(lines: string[]): string {
  return [CSV_HEADER, ...lines].join("\n") + "\n";
}

export function row(algorithm: string, bits: number, medianSeconds: number): BenchRow {
  return {
    algorithm,
    bits,
    medianSeconds,
    repetitions: 3,
    correct: true,
    seed: 7,
    includesConversion: false,
  };
}

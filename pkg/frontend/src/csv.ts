import Papa from "papaparse";

/** Header the benchmark runner writes; anything else is rejected outright. */
export const CSV_HEADER =
  "algorithm,bits,median_seconds,repetitions,correct,seed,includes_conversion";

const COLUMNS = CSV_HEADER.split(",");

export interface BenchRow {
  algorithm: string;
  bits: number;
  medianSeconds: number;
  repetitions: number;
  correct: boolean;
  seed: number;
  includesConversion: boolean;
}

export class CsvFormatError extends Error {}

function intField(raw: string, line: number, column: string, min: number): number {
  const value = Number(raw);
  if (!Number.isInteger(value) || value < min) {
    throw new CsvFormatError(
      `line ${line}: ${column} must be an integer >= ${min}, got "${raw}"`,
    );
  }
  return value;
}

function boolField(raw: string, line: number, column: string): boolean {
  if (raw === "true") return true;
  if (raw === "false") return false;
  throw new CsvFormatError(`line ${line}: ${column} must be true or false, got "${raw}"`);
}

/**
 * Parse benchmark CSV text into rows.
 *
 * The header line must match CSV_HEADER exactly and every row must carry all
 * seven fields with sane values; a file that fails either check raises
 * CsvFormatError rather than producing a half-read chart. A header-only file
 * parses to an empty list and the caller decides whether that is an error.
 */
export function parseBenchCsv(text: string): BenchRow[] {
  // Fixed delimiter: auto-detection trips over degenerate one-column input.
  const parsed = Papa.parse<string[]>(text, { delimiter: ",", skipEmptyLines: true });
  const fatal = parsed.errors.find((e) => e.type !== "FieldMismatch");
  if (fatal) {
    throw new CsvFormatError(`CSV parse failed: ${fatal.message}`);
  }
  const lines = parsed.data;
  const header = lines[0];
  if (header === undefined) {
    throw new CsvFormatError("empty file: expected a benchmark CSV header");
  }
  if (header.join(",") !== CSV_HEADER) {
    throw new CsvFormatError(
      `unexpected header "${header.join(",")}"; expected "${CSV_HEADER}"`,
    );
  }
  const rows: BenchRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i];
    if (fields === undefined) continue;
    // Line numbers in messages are 1-based and count the header.
    const line = i + 1;
    if (fields.length !== COLUMNS.length) {
      throw new CsvFormatError(
        `line ${line}: expected ${COLUMNS.length} fields, got ${fields.length}`,
      );
    }
    const [algorithm, bits, median, reps, correct, seed, conv] = fields as [
      string, string, string, string, string, string, string,
    ];
    if (algorithm === "") {
      throw new CsvFormatError(`line ${line}: algorithm name is empty`);
    }
    const medianSeconds = Number(median);
    if (!Number.isFinite(medianSeconds) || medianSeconds <= 0) {
      throw new CsvFormatError(
        `line ${line}: median_seconds must be a positive number, got "${median}"`,
      );
    }
    rows.push({
      algorithm,
      bits: intField(bits, line, "bits", 1),
      medianSeconds,
      repetitions: intField(reps, line, "repetitions", 1),
      correct: boolField(correct, line, "correct"),
      seed: intField(seed, line, "seed", 0),
      includesConversion: boolField(conv, line, "includes_conversion"),
    });
  }
  return rows;
}

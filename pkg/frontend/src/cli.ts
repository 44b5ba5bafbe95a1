import fs from "node:fs";
import yargs from "yargs";
import { CsvFormatError, parseBenchCsv } from "./csv.js";
import { EmptyPlotError, renderChart } from "./chart.js";

export interface CliIo {
  out: (line: string) => void;
  err: (line: string) => void;
}

class UsageError extends Error {}

function positiveInt(value: number | undefined, flag: string): number | undefined {
  if (value === undefined) return undefined;
  if (!Number.isInteger(value) || value < 1) {
    throw new UsageError(`${flag} must be a positive integer`);
  }
  return value;
}

/**
 * Entry point behind the `plot` binary; returns the process exit code.
 *
 * Exit codes: 0 drawn, 1 unreadable or malformed input (or nothing left to
 * plot), 2 bad arguments. The input CSV is only ever opened for reading.
 */
export function runCli(
  argv: string[],
  io: CliIo = { out: console.log, err: console.error },
): number {
  let csvPath: string;
  let outPath: string;
  let minBits: number | undefined;
  let maxBits: number | undefined;
  let linear: boolean;
  try {
    const parsed = yargs(argv)
      .scriptName("plot")
      .usage("$0 --csv <results.csv> --out <chart.svg> [--min-bits N] [--max-bits N] [--linear]")
      .option("csv", {
        type: "string",
        demandOption: true,
        describe: "benchmark results CSV to read",
      })
      .option("out", {
        type: "string",
        demandOption: true,
        describe: "SVG file to write",
      })
      .option("min-bits", {
        type: "number",
        describe: "drop rows with smaller operands",
      })
      .option("max-bits", {
        type: "number",
        describe: "drop rows with larger operands",
      })
      .option("linear", {
        type: "boolean",
        default: false,
        describe: "linear axes instead of log-log",
      })
      .strict()
      .exitProcess(false)
      .fail((msg, err) => {
        throw err ?? new UsageError(msg ?? "bad arguments");
      })
      .parseSync();
    // Under --help yargs prints usage and skips validation entirely.
    if ((parsed as { help?: boolean }).help === true) return 0;
    csvPath = parsed.csv;
    outPath = parsed.out;
    minBits = positiveInt(parsed["min-bits"], "--min-bits");
    maxBits = positiveInt(parsed["max-bits"], "--max-bits");
    linear = parsed.linear;
    if (minBits !== undefined && maxBits !== undefined && minBits > maxBits) {
      throw new UsageError("--min-bits must not exceed --max-bits");
    }
  } catch (e) {
    io.err(`plot: ${e instanceof Error ? e.message : String(e)}`);
    return 2;
  }

  let text: string;
  try {
    text = fs.readFileSync(csvPath, "utf8");
  } catch (e) {
    io.err(`plot: cannot read ${csvPath}: ${e instanceof Error ? e.message : String(e)}`);
    return 1;
  }

  try {
    const rows = parseBenchCsv(text);
    if (rows.length === 0) {
      io.err(`plot: ${csvPath}: no data rows under the header`);
      return 1;
    }
    const chart = renderChart(rows, { minBits, maxBits, linear });
    fs.writeFileSync(outPath, chart.svg, "utf8");
    io.out(
      `wrote ${outPath}: ${chart.seriesNames.length} series ` +
        `(${chart.seriesNames.join(", ")}), ${chart.pointCount} points, ` +
        `${chart.crossovers.length} crossovers`,
    );
    return 0;
  } catch (e) {
    if (e instanceof CsvFormatError) {
      io.err(`plot: ${csvPath}: ${e.message}`);
      return 1;
    }
    if (e instanceof EmptyPlotError) {
      io.err(`plot: ${e.message}`);
      return 1;
    }
    if (e instanceof Error && "code" in e) {
      // Filesystem trouble writing the output image.
      io.err(`plot: cannot write ${outPath}: ${e.message}`);
      return 1;
    }
    throw e;
  }
}

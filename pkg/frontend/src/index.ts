export { CSV_HEADER, CsvFormatError, parseBenchCsv, type BenchRow } from "./csv.js";
export {
  findCrossovers,
  groupSeries,
  type Crossover,
  type Series,
  type SeriesPoint,
} from "./crossover.js";
export {
  EmptyPlotError,
  renderChart,
  seriesColor,
  SERIES_COLORS,
  type ChartResult,
  type RenderOptions,
} from "./chart.js";
export { runCli, type CliIo } from "./cli.js";

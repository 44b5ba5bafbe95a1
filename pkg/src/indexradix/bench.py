"""Benchmark harness for the multiplier implementations.

Deterministic operand generation, single-threaded median timing, mandatory
per-point correctness verification against built-in integer arithmetic, CSV
output with a fixed header, and a crossover summary comparing algorithm
pairs across the measured grid.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .arith import multiply_indices
from .baselines import LimbNumber, karatsuba_mul, ntt_mul, schoolbook_mul
from .index_repr import deconstruct, reconstruct_sum

CSV_HEADER = "algorithm,bits,median_seconds,repetitions,correct,seed,includes_conversion"

# Grid defaults: the CI grid finishes in minutes on a small desktop, the
# long grid probes the large-operand regime and is strictly opt-in.
CI_GRID = tuple(2**k for k in range(2, 15))
LONG_GRID = tuple(2**k for k in range(2, 17))


class BenchCorrectnessError(RuntimeError):
    """A timed multiplier disagreed with the built-in product."""


@dataclass(frozen=True)
class _Algo:
    prepare: Callable[[int], object]
    kernel: Callable[[object, object], object]
    finish: Callable[[object], int]


def _limb_algo(mul: Callable[[LimbNumber, LimbNumber], LimbNumber]) -> _Algo:
    return _Algo(
        prepare=LimbNumber.from_int,
        kernel=mul,
        finish=lambda r: r.to_int(),
    )


ALGORITHMS: dict[str, _Algo] = {
    "poly_index": _Algo(prepare=deconstruct, kernel=multiply_indices, finish=reconstruct_sum),
    "karatsuba": _limb_algo(karatsuba_mul),
    "ntt": _limb_algo(ntt_mul),
    "schoolbook": _limb_algo(schoolbook_mul),
}

DEFAULT_ALGORITHMS = ("poly_index", "karatsuba", "ntt")


@dataclass(frozen=True)
class BenchConfig:
    """What to measure: grid, repetitions, algorithms, seed, output."""

    bit_sizes: tuple[int, ...] = CI_GRID
    repetitions: int = 3
    algorithms: tuple[str, ...] = DEFAULT_ALGORITHMS
    rng_seed: int = 0
    output_path: str | None = None
    include_conversion: bool = False

    def __post_init__(self) -> None:
        if not self.bit_sizes:
            object.__setattr__(self, "bit_sizes", ())
        sizes = tuple(int(b) for b in self.bit_sizes)
        if any(b < 1 for b in sizes):
            raise ValueError("bit sizes must be positive")
        if any(sizes[i] >= sizes[i + 1] for i in range(len(sizes) - 1)):
            raise ValueError("bit sizes must be strictly ascending")
        object.__setattr__(self, "bit_sizes", sizes)
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ValueError(f"unknown algorithms: {unknown}")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    bits: int
    median_seconds: float
    repetitions: int
    correct: bool
    seed: int
    includes_conversion: bool


def gen_operand(bits: int, seed: int) -> int:
    """Deterministic operand with exactly the requested bit length.

    The top bit is forced so the width is exact; the remaining bits are
    uniform. Identical (bits, seed) always produces the identical value.
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    rng = random.Random(seed * 1_000_003 + bits)
    return (1 << (bits - 1)) | rng.getrandbits(bits - 1)


def _pair_seed(rng_seed: int, algorithm: str, bits: int) -> int:
    # Stable across processes; a fresh pair per (algorithm, bits) point.
    return zlib.crc32(f"{rng_seed}:{algorithm}:{bits}".encode())


# Each timing sample must span at least this long, otherwise a sample is
# mostly timer resolution. The loop count is calibrated once per point.
_MIN_SAMPLE_SECONDS = 2e-3
_MAX_SAMPLE_LOOPS = 1 << 16


def _calibrate_loops(once: Callable[[], object]) -> int:
    loops = 1
    while loops < _MAX_SAMPLE_LOOPS:
        t0 = time.perf_counter()
        for _ in range(loops):
            once()
        if time.perf_counter() - t0 >= _MIN_SAMPLE_SECONDS:
            break
        loops *= 4
    return loops


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    """Measure every (algorithm, bits) point of the config.

    The timing loop is single-threaded. Each point times the multiplier
    kernel on pre-converted operands unless cfg.include_conversion is set,
    in which case the full int-to-int pipeline is timed. One warm-up run
    per point is excluded from timing and doubles as the correctness check
    against the built-in product; any mismatch aborts the whole run. Each
    repetition is a calibrated loop of calls spanning a few milliseconds;
    the recorded median is per call.

    Writes the CSV to cfg.output_path when set, and returns the records.
    """
    records = []
    for name in cfg.algorithms:
        algo = ALGORITHMS[name]
        for bits in cfg.bit_sizes:
            point_seed = _pair_seed(cfg.rng_seed, name, bits)
            a = gen_operand(bits, point_seed)
            b = gen_operand(bits, point_seed + 1)
            na, nb = algo.prepare(a), algo.prepare(b)
            if cfg.include_conversion:
                def once() -> int:
                    return algo.finish(algo.kernel(algo.prepare(a), algo.prepare(b)))
            else:
                def once() -> object:
                    return algo.kernel(na, nb)
            got = algo.finish(algo.kernel(na, nb))
            expected = a * b
            if got != expected:
                raise BenchCorrectnessError(
                    f"{name} at {bits} bits (seed {cfg.rng_seed}): "
                    f"expected {expected}, got {got}"
                )
            loops = _calibrate_loops(once)
            times = []
            for _ in range(cfg.repetitions):
                t0 = time.perf_counter()
                for _ in range(loops):
                    once()
                times.append((time.perf_counter() - t0) / loops)
            records.append(
                BenchRecord(
                    algorithm=name,
                    bits=bits,
                    median_seconds=statistics.median(times),
                    repetitions=cfg.repetitions,
                    correct=True,
                    seed=cfg.rng_seed,
                    includes_conversion=cfg.include_conversion,
                )
            )
    if cfg.output_path:
        write_csv(records, cfg.output_path)
    return records


def write_csv(records: Sequence[BenchRecord], path: str) -> None:
    """Write records under the fixed header, UTF-8, LF line endings."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for r in records:
            writer.writerow(
                [
                    r.algorithm,
                    r.bits,
                    repr(r.median_seconds),
                    r.repetitions,
                    "true" if r.correct else "false",
                    r.seed,
                    "true" if r.includes_conversion else "false",
                ]
            )


def read_csv(path: str) -> list[BenchRecord]:
    """Parse a benchmark CSV back into records; the header must match."""
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"empty benchmark CSV: {path}") from None
        if header != CSV_HEADER.split(","):
            raise ValueError(f"unexpected CSV header in {path}: {header}")
        out = []
        for row in reader:
            if not row:
                continue
            out.append(
                BenchRecord(
                    algorithm=row[0],
                    bits=int(row[1]),
                    median_seconds=float(row[2]),
                    repetitions=int(row[3]),
                    correct=row[4] == "true",
                    seed=int(row[5]),
                    includes_conversion=row[6] == "true",
                )
            )
        return out


class InsufficientDataError(ValueError):
    """Crossover analysis needs at least two shared grid sizes per pair."""


@dataclass(frozen=True)
class PairCrossover:
    first: str
    second: str
    crossover_bits: int | None


@dataclass(frozen=True)
class CrossoverReport:
    grid: tuple[int, ...]
    pairs: tuple[PairCrossover, ...] = field(default=())
    fastest: tuple[tuple[int, str], ...] = field(default=())

    def as_text(self) -> str:
        lines = [f"grid: {', '.join(str(b) for b in self.grid)} bits"]
        for bits, name in self.fastest:
            lines.append(f"fastest at {bits} bits: {name}")
        for p in self.pairs:
            if p.crossover_bits is None:
                lines.append(f"{p.first} -> {p.second}: none in range")
            else:
                lines.append(
                    f"{p.first} -> {p.second}: {p.second} overtakes at {p.crossover_bits} bits and stays ahead"
                )
        return "\n".join(lines)

    def as_json(self) -> dict:
        return {
            "grid": list(self.grid),
            "fastest": {str(bits): name for bits, name in self.fastest},
            "pairs": [
                {"first": p.first, "second": p.second, "crossover_bits": p.crossover_bits}
                for p in self.pairs
            ],
        }


def crossover_report(records: Sequence[BenchRecord]) -> CrossoverReport:
    """Smallest grid size where the second algorithm gets and stays faster.

    Considers every ordered pair of measured algorithms. A pair crosses at
    size s when the second algorithm is strictly faster at s and at every
    larger shared size; pairs that never cross report none. Fewer than two
    shared sizes for any pair is an error, there is no trend to read.
    """
    medians: dict[tuple[str, int], float] = {}
    algorithms: list[str] = []
    sizes: set[int] = set()
    for r in records:
        if r.algorithm not in algorithms:
            algorithms.append(r.algorithm)
        medians[(r.algorithm, r.bits)] = r.median_seconds
        sizes.add(r.bits)
    if len(algorithms) < 2:
        raise InsufficientDataError("need at least two algorithms to compare")
    pairs = []
    for first in algorithms:
        for second in algorithms:
            if first == second:
                continue
            shared = sorted(
                s for s in sizes if (first, s) in medians and (second, s) in medians
            )
            if len(shared) < 2:
                raise InsufficientDataError(
                    f"pair ({first}, {second}) shares fewer than 2 grid sizes"
                )
            crossover = None
            for s in reversed(shared):
                if medians[(second, s)] < medians[(first, s)]:
                    crossover = s
                else:
                    break
            pairs.append(PairCrossover(first, second, crossover))
    fastest = []
    for s in sorted(sizes):
        measured = [(medians[(name, s)], name) for name in algorithms if (name, s) in medians]
        if measured:
            fastest.append((s, min(measured)[1]))
    return CrossoverReport(tuple(sorted(sizes)), tuple(pairs), tuple(fastest))

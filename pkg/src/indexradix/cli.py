"""Command line front end.

Numbers are decimal by default, 0x-prefixed hex is accepted anywhere, and
an operand of the form @path reads the literal from a file. Index lists
print as compact JSON so command substitution pipes them back in cleanly.

Exit codes: 0 success, 2 bad arguments or unparsable input, 3 the
partition grid exceeded the CPU allowance, 4 a benchmark correctness
check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import add, multiply_integers
from .baselines import karatsuba_mul, ntt_mul
from .bench import (
    ALGORITHMS,
    CI_GRID,
    LONG_GRID,
    BenchConfig,
    BenchCorrectnessError,
    crossover_report,
    run_bench,
)
from .fraction import DEFAULT_SENSITIVITY, dec2binary
from .index_repr import (
    deconstruct,
    dump_indexes,
    format_number,
    parse_indexes,
    parse_number,
    reconstruct_strings,
    reconstruct_sum,
)
from .parallel import MaxCpuExceededError, limb_multiplier, parallel_multiply


def _read_operand(text: str) -> int:
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8").strip()
    return parse_number(text)


def _cmd_deconstruct(args: argparse.Namespace) -> int:
    print(dump_indexes(deconstruct(_read_operand(args.number))))
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    entries = parse_indexes(args.indexes)
    rebuild = reconstruct_strings if args.strings else reconstruct_sum
    print(format_number(rebuild(entries), args.hex))
    return 0


def _cmd_add(args: argparse.Namespace) -> int:
    total = add(deconstruct(_read_operand(args.a)), deconstruct(_read_operand(args.b)))
    print(format_number(reconstruct_sum(total), args.hex))
    return 0


def _cmd_mul(args: argparse.Namespace) -> int:
    print(format_number(multiply_integers(_read_operand(args.a), _read_operand(args.b)), args.hex))
    return 0


_PMUL_MULTIPLIERS = {
    "index": None,  # resolved to the default exponent-list multiplier
    "karatsuba": limb_multiplier(karatsuba_mul),
    "ntt": limb_multiplier(ntt_mul),
}


def _cmd_pmul(args: argparse.Namespace) -> int:
    trace: list | None = [] if args.trace else None
    kwargs: dict = {
        "worker_count": args.workers,
        "aggregate": args.aggregate,
        "trace": trace,
    }
    chosen = _PMUL_MULTIPLIERS[args.multiplier]
    if chosen is not None:
        kwargs["multiplier"] = chosen
    value = parallel_multiply(
        _read_operand(args.a),
        _read_operand(args.b),
        args.parts_a,
        args.parts_b,
        args.max_cpu,
        **kwargs,
    )
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace, indent=2) + "\n", encoding="utf-8")
    print(format_number(value, args.hex))
    return 0


def _cmd_frac(args: argparse.Namespace) -> int:
    print(dump_indexes(dec2binary(args.fraction, args.sensitivity)))
    return 0


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _cmd_bench(args: argparse.Namespace) -> int:
    fields: dict = {}
    if args.config:
        fields.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
        if "bit_sizes" in fields:
            fields["bit_sizes"] = tuple(fields["bit_sizes"])
        if "algorithms" in fields:
            fields["algorithms"] = tuple(fields["algorithms"])
    if args.profile:
        fields["bit_sizes"] = CI_GRID if args.profile == "ci" else LONG_GRID
    if args.bits:
        fields["bit_sizes"] = _parse_int_list(args.bits)
    if args.algorithms:
        fields["algorithms"] = tuple(tok.strip() for tok in args.algorithms.split(","))
    if args.reps is not None:
        fields["repetitions"] = args.reps
    if args.seed is not None:
        fields["rng_seed"] = args.seed
    if args.include_conversion:
        fields["include_conversion"] = True
    fields["output_path"] = args.out
    cfg = BenchConfig(**fields)
    records = run_bench(cfg)
    report = crossover_report(records)
    if args.report_json:
        Path(args.report_json).write_text(
            json.dumps(report.as_json(), indent=2) + "\n", encoding="utf-8"
        )
    print(report.as_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indexradix",
        description="sparse radix-2 index arithmetic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deconstruct", help="integer to exponent list")
    p.add_argument("number", help="decimal, 0x-hex, or @file")
    p.set_defaults(func=_cmd_deconstruct)

    p = sub.add_parser("reconstruct", help="exponent list to integer")
    p.add_argument("indexes", help="JSON array like [6,5,0] or bare comma list")
    p.add_argument("--strings", action="store_true", help="use the digit-string rebuild route")
    p.add_argument("--hex", action="store_true", help="print the value in hex")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("add", help="add two integers in index space")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("mul", help="multiply two integers in index space")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("pmul", help="partitioned parallel multiply")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--parts-a", type=int, default=1, help="target part count for a")
    p.add_argument("--parts-b", type=int, default=1, help="target part count for b")
    p.add_argument("--max-cpu", type=int, default=512, help="largest allowed task grid")
    p.add_argument("--workers", type=int, default=None, help="worker pool size override")
    p.add_argument("--multiplier", choices=sorted(_PMUL_MULTIPLIERS), default="index")
    p.add_argument("--aggregate", choices=["integer", "indexes"], default="integer")
    p.add_argument("--trace", metavar="PATH", help="write a JSON record per task")
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=_cmd_pmul)

    p = sub.add_parser("frac", help="decimal fraction to negative exponent list")
    p.add_argument("fraction", help="for example 0.390625")
    p.add_argument("--sensitivity", type=int, default=DEFAULT_SENSITIVITY)
    p.set_defaults(func=_cmd_frac)

    p = sub.add_parser("bench", help="run the multiplier benchmark")
    p.add_argument("--out", required=True, metavar="CSV", help="where to write results")
    p.add_argument("--bits", help="comma list of bit sizes, overrides the profile")
    p.add_argument("--profile", choices=["ci", "long"], help="preset grid")
    p.add_argument("--algorithms", help=f"comma list from: {', '.join(sorted(ALGORITHMS))}")
    p.add_argument("--reps", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--include-conversion", action="store_true", help="time int-to-int pipelines")
    p.add_argument("--report-json", metavar="PATH", help="also write the crossover report as JSON")
    p.add_argument("--config", metavar="JSON", help="BenchConfig fields as a JSON file")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MaxCpuExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except BenchCorrectnessError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (ValueError, OverflowError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

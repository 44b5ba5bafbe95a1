"""Sparse radix-2 index-list arithmetic.

Integers are carried as lists of set-bit exponents. Addition is list
concatenation plus a carry fold, multiplication is the Cartesian sum of
exponents, and both stay cheap while operands are sparse. Dense limb
baselines, a partitioned parallel multiplier, and a benchmark harness
round out the package.
"""

from .arith import (
    IndexOverflowError,
    add,
    concat_add,
    cross_sums,
    look_ahead,
    multiply_indices,
    multiply_integers,
    normalize,
    simplify_reference,
)
from .baselines import (
    LimbNumber,
    NttCapacityError,
    NttPlan,
    forward_ntt,
    inverse_ntt,
    karatsuba_mul,
    ntt_mul,
    plan_ntt,
    schoolbook_mul,
)
from .bench import (
    BenchConfig,
    BenchCorrectnessError,
    BenchRecord,
    CrossoverReport,
    InsufficientDataError,
    crossover_report,
    gen_operand,
    read_csv,
    run_bench,
    write_csv,
)
from .fraction import dec2binary, deconstruct_real, reconstruct_fraction
from .index_repr import (
    INDEX_LIMIT,
    deconstruct,
    divide_by_2,
    dump_indexes,
    format_number,
    ilog2,
    is_canonical,
    parse_indexes,
    parse_number,
    reconstruct_strings,
    reconstruct_sum,
)
from .parallel import (
    MaxCpuExceededError,
    ParallelJob,
    TaskFailedError,
    TaskResult,
    dispatch,
    limb_multiplier,
    make_jobs,
    parallel_multiply,
    split,
)

__version__ = "0.1.0"

__all__ = [
    "INDEX_LIMIT",
    "BenchConfig",
    "BenchCorrectnessError",
    "BenchRecord",
    "CrossoverReport",
    "IndexOverflowError",
    "InsufficientDataError",
    "LimbNumber",
    "MaxCpuExceededError",
    "NttCapacityError",
    "NttPlan",
    "ParallelJob",
    "TaskFailedError",
    "TaskResult",
    "add",
    "concat_add",
    "cross_sums",
    "crossover_report",
    "dec2binary",
    "deconstruct",
    "deconstruct_real",
    "dispatch",
    "divide_by_2",
    "dump_indexes",
    "format_number",
    "forward_ntt",
    "gen_operand",
    "ilog2",
    "inverse_ntt",
    "is_canonical",
    "karatsuba_mul",
    "limb_multiplier",
    "look_ahead",
    "make_jobs",
    "multiply_indices",
    "multiply_integers",
    "normalize",
    "ntt_mul",
    "parallel_multiply",
    "parse_indexes",
    "parse_number",
    "plan_ntt",
    "read_csv",
    "reconstruct_fraction",
    "reconstruct_strings",
    "reconstruct_sum",
    "run_bench",
    "schoolbook_mul",
    "simplify_reference",
    "split",
    "write_csv",
]

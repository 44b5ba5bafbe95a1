"""Partitioned multiplication over a fixed pool of in-process workers.

The exponent lists of both operands are chopped into sub-lists, every pair
of sub-lists becomes an independent multiplication task, and the partial
products are summed. Since the parts of each operand cover its exponents
exactly once, the task grid reproduces the full product. Workers are
threads inside this process; assignment is round-robin by task order.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Callable, Sequence

from .arith import multiply_indices, normalize
from .baselines import LimbNumber
from .index_repr import deconstruct, reconstruct_sum

Multiplier = Callable[[Sequence[int], Sequence[int]], list[int]]

THREADS_ENV_VAR = "INDEXRADIX_THREADS"


class MaxCpuExceededError(RuntimeError):
    """The task grid wants more workers than the caller allows."""

    def __init__(self, required: int, allowed: int):
        super().__init__(f"partitioning requires {required} tasks but only {allowed} CPUs are allowed")
        self.required = required
        self.allowed = allowed


class TaskFailedError(RuntimeError):
    """A worker raised while computing one task; nothing was aggregated."""

    def __init__(self, task_id: tuple[int, int], cause: BaseException):
        super().__init__(f"task {task_id} failed: {cause}")
        self.task_id = task_id


@dataclass(frozen=True)
class ParallelJob:
    """One cell of the task grid: multiply a_part by b_part."""

    task_id: tuple[int, int]
    a_part: tuple[int, ...]
    b_part: tuple[int, ...]


@dataclass(frozen=True)
class TaskResult:
    task_id: tuple[int, int]
    indexes: tuple[int, ...]
    worker: int


def split(entries: Sequence[int], size: int) -> list[list[int]]:
    """Chop a descending exponent list into ascending parts of a given size.

    Entries are consumed from the tail of the parent list, so each part is
    ascending and the first part holds the lowest exponents. The final part
    keeps whatever remains; no empty part is ever produced.

    split([5, 3, 1], 2) == [[1, 3], [5]].
    """
    if size < 1:
        raise ValueError("part size must be >= 1")
    rev = list(entries)[::-1]
    return [rev[i : i + size] for i in range(0, len(rev), size)]


def make_jobs(a_parts: Sequence[Sequence[int]], b_parts: Sequence[Sequence[int]]) -> list[ParallelJob]:
    """Full task grid, row-major: one job per (a part, b part) pair."""
    return [
        ParallelJob((i, j), tuple(pa), tuple(pb))
        for i, pa in enumerate(a_parts)
        for j, pb in enumerate(b_parts)
    ]


def default_worker_count(task_count: int) -> int:
    """Pool size for a task grid, capped by INDEXRADIX_THREADS when set."""
    cap_text = os.environ.get(THREADS_ENV_VAR)
    if cap_text is not None:
        try:
            cap = int(cap_text)
        except ValueError:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {cap_text!r}") from None
        if cap < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be >= 1, got {cap}")
    else:
        cap = os.cpu_count() or 1
    return max(1, min(task_count, cap))


def dispatch(
    jobs: Sequence[ParallelJob],
    worker_count: int,
    multiplier: Multiplier = multiply_indices,
) -> list[TaskResult]:
    """Run every job once; job k goes to worker k % worker_count.

    Results come back in job order regardless of scheduling. The first
    failing task (by position) aborts the whole call, nothing partial is
    returned.
    """
    if worker_count < 1:
        raise ValueError("worker_count must be >= 1")
    results: list[TaskResult | None] = [None] * len(jobs)
    failures: list[tuple[int, tuple[int, int], BaseException]] = []

    def run_slice(worker: int) -> None:
        for k in range(worker, len(jobs), worker_count):
            job = jobs[k]
            try:
                product = multiplier(job.a_part, job.b_part)
            except BaseException as e:  # surfaced after join, keyed by task
                failures.append((k, job.task_id, e))
                return
            results[k] = TaskResult(job.task_id, tuple(product), worker)

    if worker_count == 1 or len(jobs) <= 1:
        run_slice(0)
    else:
        threads = [
            threading.Thread(target=run_slice, args=(w,), name=f"indexradix-worker-{w}")
            for w in range(min(worker_count, len(jobs)))
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
    if failures:
        failures.sort(key=lambda f: f[0])
        _, task_id, cause = failures[0]
        raise TaskFailedError(task_id, cause) from cause
    return [r for r in results if r is not None]


def limb_multiplier(mul: Callable[[LimbNumber, LimbNumber], LimbNumber], width: int = 32) -> Multiplier:
    """Adapt a limb-level multiplier to the exponent-list worker signature."""

    def run(a_part: Sequence[int], b_part: Sequence[int]) -> list[int]:
        pa = LimbNumber.from_int(reconstruct_sum(a_part), width)
        pb = LimbNumber.from_int(reconstruct_sum(b_part), width)
        return deconstruct(mul(pa, pb).to_int())

    return run


def parallel_multiply(
    a: int,
    b: int,
    parts_a: int,
    parts_b: int,
    max_cpu: int,
    *,
    worker_count: int | None = None,
    multiplier: Multiplier = multiply_indices,
    aggregate: str = "integer",
    trace: list | None = None,
) -> int:
    """Multiply a * b by partitioning both exponent lists.

    parts_a and parts_b are target part counts; the actual part size is
    len(indexes) // parts, floored, never below 1, so the realised count can
    differ slightly. The grid of part pairs must fit within max_cpu tasks or
    MaxCpuExceededError is raised before any work starts.

    aggregate chooses how partials combine: "integer" rebuilds each partial
    and sums machine integers, "indexes" concatenates all partial exponent
    lists and normalizes once. Both give the same value. When trace is a
    list, one record per task is appended to it.
    """
    if a < 0 or b < 0:
        raise ValueError("operands must be non-negative")
    if parts_a < 1 or parts_b < 1:
        raise ValueError("partition estimates must be >= 1")
    if max_cpu < 1:
        raise ValueError("max_cpu must be >= 1")
    if aggregate not in ("integer", "indexes"):
        raise ValueError(f"unknown aggregate mode: {aggregate!r}")

    av = deconstruct(a)
    bv = deconstruct(b)
    a_parts = split(av, max(1, len(av) // parts_a)) if av else []
    b_parts = split(bv, max(1, len(bv) // parts_b)) if bv else []
    required = len(a_parts) * len(b_parts)
    if required > max_cpu:
        raise MaxCpuExceededError(required, max_cpu)
    jobs = make_jobs(a_parts, b_parts)
    if worker_count is None:
        worker_count = default_worker_count(len(jobs))
    results = dispatch(jobs, worker_count, multiplier)

    if trace is not None:
        for job, res in zip(jobs, results):
            trace.append(
                {
                    "task": list(res.task_id),
                    "a_size": len(job.a_part),
                    "b_size": len(job.b_part),
                    "partial": str(reconstruct_sum(res.indexes)),
                    "worker": res.worker,
                }
            )

    if aggregate == "integer":
        return sum(reconstruct_sum(r.indexes) for r in results)
    bag: list[int] = []
    for r in results:
        bag.extend(r.indexes)
    return reconstruct_sum(normalize(bag))

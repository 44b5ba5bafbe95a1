"""Arithmetic on exponent lists.

Addition is list concatenation: the combined multiset of exponents already
denotes the sum, it just may hold duplicates. Multiplication is the
Cartesian sum of the operand exponents, since 2**i * 2**j == 2**(i + j).
Both leave a raw multiset behind; normalize folds it back to the canonical
strictly-decreasing form with the identity 2**n + 2**n == 2**(n + 1).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

import numpy as np

from .index_repr import INDEX_LIMIT, deconstruct, reconstruct_sum


class IndexOverflowError(OverflowError):
    """An exponent escaped the machine-word index bound."""


# Pair counts up to this size are cheaper in plain Python than through
# numpy; measured on small operands where array setup dominates.
_VECTOR_CUTOFF = 512

# Upper bound on elements per temporary block in the vectorised path,
# keeps peak memory near 32 MB however large the operands get.
_BLOCK_ELEMS = 1 << 22


def concat_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Raw sum of two exponent lists: just the concatenation."""
    return list(a) + list(b)


def normalize(entries: Iterable[int]) -> list[int]:
    """Fold duplicate exponents until all are unique, return them descending.

    Counts occurrences per exponent, then sweeps upward: an even count at n
    carries half of itself to n + 1, an odd count leaves one bit behind.
    Equivalent to applying 2**n + 2**n == 2**(n + 1) to exhaustion, but runs
    in one pass over the distinct exponents.
    """
    counts = Counter(entries)
    if not counts:
        return []
    if min(counts) < 0:
        raise ValueError("indexes must be non-negative")
    out = []
    carry = 0
    pos = 0
    for k in sorted(counts):
        # Drain carry bits that settle below the next occupied exponent.
        while carry and pos < k:
            if carry & 1:
                out.append(pos)
            carry >>= 1
            pos += 1
        c = counts[k] + (carry if pos == k else 0)
        if pos != k:
            carry = 0
        if c & 1:
            out.append(k)
        carry = c >> 1
        pos = k + 1
    while carry:
        if carry & 1:
            out.append(pos)
        carry >>= 1
        pos += 1
    if out and out[-1] >= INDEX_LIMIT:
        raise IndexOverflowError("carry pushed an exponent past the index word bound")
    out.reverse()
    return out


def look_ahead(target: int, occupied: Iterable[int]) -> int:
    """Smallest index >= target that does not appear in occupied."""
    taken = set(occupied)
    i = target
    while i in taken:
        i += 1
    return i


def simplify_reference(entries: Iterable[int]) -> list[int]:
    """Rewrite-based normaliser, kept as a slow cross-check for normalize.

    Inserts raw entries one at a time: each entry probes for the first free
    slot at or above itself, and every filled slot it skipped over is
    consumed by the merge (those slots plus the entry sum to exactly the
    landing power). Quadratic; intended for tests, not production use.
    """
    result: list[int] = []
    for entry in entries:
        if entry < 0:
            raise ValueError("indexes must be non-negative")
        landing = look_ahead(entry, result)
        for k in range(entry, landing):
            # look_ahead guarantees every slot in [entry, landing) is present.
            result.remove(k)
        result.append(landing)
    return sorted(result, reverse=True)


def add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Canonical sum of two canonical exponent lists."""
    if not a:
        return list(b)
    if not b:
        return list(a)
    return normalize(concat_add(a, b))


def cross_sums(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """All pairwise exponent sums, un-normalised: exactly len(a)*len(b) entries."""
    return [i + j for i in a for j in b]


def multiply_indices(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two canonical exponent lists, canonical result.

    The product of sums of powers of two expands to one power per operand
    pair, so the raw product is cross_sums(a, b); normalize folds it back
    down. Large pair counts take a vectorised route with identical
    semantics.
    """
    if not a or not b:
        return []
    # Entry order is not assumed: partitioned multiplication hands in
    # ascending sub-lists, canonical operands arrive descending.
    if max(a) + max(b) >= INDEX_LIMIT:
        raise IndexOverflowError("product exponent would exceed the index word bound")
    # A one-entry operand is a power of two; the product is a shift, which
    # cannot create duplicates, so the other list's ordering survives as is.
    if len(a) == 1:
        return [a[0] + j for j in sorted(b, reverse=True)]
    if len(b) == 1:
        return [b[0] + i for i in sorted(a, reverse=True)]
    if len(a) * len(b) <= _VECTOR_CUTOFF:
        return normalize(cross_sums(a, b))
    return _multiply_vectorised(a, b)


def _multiply_vectorised(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # Same multiset arithmetic as the small path, restated over arrays:
    # bucket-count every pairwise sum, then repeatedly halve the buckets,
    # shifting the halves up one slot, until every count is a single bit.
    # Each halving round is the duplicate fold applied everywhere at once.
    av = np.asarray(a, dtype=np.int64)
    bv = np.asarray(b, dtype=np.int64)
    width = int(av.max() + bv.max()) + 66  # product bits plus carry headroom
    counts = np.zeros(width, dtype=np.int64)
    block = max(1, _BLOCK_ELEMS // len(b))
    for lo in range(0, len(av), block):
        sums = (av[lo : lo + block, None] + bv[None, :]).ravel()
        counts += np.bincount(sums, minlength=width)
    while counts.max() > 1:
        carry = counts >> 1
        counts &= 1
        counts[1:] += carry[:-1]
    return np.flatnonzero(counts)[::-1].tolist()


def multiply_integers(x: int, y: int) -> int:
    """Multiply two unsigned integers entirely through the index form."""
    return reconstruct_sum(multiply_indices(deconstruct(x), deconstruct(y)))

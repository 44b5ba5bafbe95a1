"""Sparse radix-2 representation of unsigned integers.

A number is stored as the list of its set bit positions, highest first,
so 97 (binary 1100001) becomes [6, 5, 0]. The list for 0 is empty. The
list length is the popcount, which keeps sparse values short regardless
of how wide they are. All functions here are pure; none mutate their
arguments.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

# Index entries must stay inside a signed 64-bit machine word. Values whose
# bit length reaches this bound are out of scope.
INDEX_LIMIT = 2**63 - 1

_DECIMAL_RE = re.compile(r"[0-9]+\Z")
_HEX_RE = re.compile(r"0[xX][0-9a-fA-F]+\Z")


def divide_by_2(n: int) -> list[int]:
    """Binary digits of n by repeated halving, least significant first.

    divide_by_2(15) == [1, 1, 1, 1]; divide_by_2(0) == [].
    """
    if n < 0:
        raise ValueError("divide_by_2 requires n >= 0")
    bits = []
    while n > 0:
        bits.append(n & 1)
        n >>= 1
    return bits


def ilog2(n: int) -> int:
    """Exact floor(log2(n)) for n >= 1.

    Integer-only on purpose: float log2 misplaces the top bit once values
    outgrow the 53-bit mantissa.
    """
    if n <= 0:
        raise ValueError("ilog2 requires n >= 1")
    return n.bit_length() - 1


def deconstruct(n: int) -> list[int]:
    """Exponent list of n, highest bit first.

    Repeatedly strips the top set bit: n == sum(2**i for i in result).
    The result is strictly decreasing and has popcount(n) entries.
    """
    if n < 0:
        raise ValueError("deconstruct requires n >= 0")
    out = []
    while n:
        i = n.bit_length() - 1
        out.append(i)
        n -= 1 << i
    return out


def reconstruct_sum(entries: Iterable[int]) -> int:
    """Rebuild the integer as a plain sum of powers of two.

    Tolerates any entry order and duplicate entries; duplicates add, so
    reconstruct_sum([4, 0, 4, 2, 0]) == 38.
    """
    entries = list(entries)
    if not entries:
        return 0
    top = max(entries)
    if min(entries) < 0:
        raise ValueError("indexes must be non-negative")
    # Common case is a duplicate-free list: set bits in a buffer and convert
    # once. Repeated indexes fall back to genuine addition.
    buf = bytearray((top >> 3) + 1)
    extra = 0
    for i in entries:
        mask = 1 << (i & 7)
        if buf[i >> 3] & mask:
            extra += 1 << i
        else:
            buf[i >> 3] |= mask
    return int.from_bytes(buf, "little") + extra


def reconstruct_strings(entries: Iterable[int]) -> int:
    """Rebuild the integer by materialising each power as a digit string.

    Each index becomes the string "1" followed by that many zeros, which is
    parsed base 2 and accumulated. Slower than reconstruct_sum by design;
    kept as an independent second route for cross-checking.
    """
    total = 0
    for i in entries:
        if i < 0:
            raise ValueError("indexes must be non-negative")
        total += int("1" + "0" * i, 2)
    return total


def is_canonical(entries: Sequence[int]) -> bool:
    """True when entries are strictly decreasing and inside the index bound."""
    if any(i < 0 or i >= INDEX_LIMIT for i in entries):
        return False
    return all(entries[k] > entries[k + 1] for k in range(len(entries) - 1))


def parse_number(text: str, radix: str = "auto") -> int:
    """Parse an unsigned integer literal, decimal or 0x-prefixed hex.

    radix may be "auto" (decide by prefix), "decimal", or "hex". Signs,
    whitespace inside the literal, and stray characters are rejected.
    """
    if radix not in ("auto", "decimal", "hex"):
        raise ValueError(f"unknown radix hint: {radix!r}")
    t = text.strip()
    if not t:
        raise ValueError("empty number literal")
    if radix == "auto":
        radix = "hex" if t[:2].lower() == "0x" else "decimal"
    if radix == "hex":
        if not _HEX_RE.match(t):
            raise ValueError(f"not a 0x-prefixed hex literal: {text!r}")
        return int(t, 16)
    if not _DECIMAL_RE.match(t):
        raise ValueError(f"not an unsigned decimal literal: {text!r}")
    return int(t, 10)


def format_number(n: int, hex_output: bool = False) -> str:
    """Render n so that parse_number(format_number(n)) round-trips."""
    if n < 0:
        raise ValueError("format_number requires n >= 0")
    return hex(n) if hex_output else str(n)


def dump_indexes(entries: Sequence[int]) -> str:
    """Compact JSON form of an index list, e.g. [6,5,0]."""
    return "[" + ",".join(str(i) for i in entries) + "]"


def parse_indexes(text: str) -> list[int]:
    """Parse an index list from JSON ([6,5,0]) or bare comma form (6,5,0).

    Accepts any integer entries, including the negative indexes used for
    fractions; range and ordering rules are enforced by the consumers.
    """
    t = text.strip()
    if not t or t == "[]":
        return []
    if t.startswith("["):
        try:
            parsed = json.loads(t)
        except json.JSONDecodeError as e:
            raise ValueError(f"bad index list: {text!r}") from e
        if not isinstance(parsed, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in parsed
        ):
            raise ValueError(f"index list must hold integers: {text!r}")
        return parsed
    try:
        return [int(tok.strip()) for tok in t.split(",")]
    except ValueError as e:
        raise ValueError(f"bad index list: {text!r}") from e

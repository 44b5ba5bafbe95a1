"""Binary fractions as negative exponent lists.

A value in [0, 1) is held as a strictly decreasing list of negative
exponents: [-2, -3, -6] is 2**-2 + 2**-3 + 2**-6 = 0.390625. Conversion
from decimal text is exact (scaled integers, no floats) and truncates
after a caller-chosen number of set bits, the sensitivity. There is no
arithmetic on fraction lists here, only conversion in and out.
"""

from __future__ import annotations

import re
from typing import Sequence

from .index_repr import deconstruct

DEFAULT_SENSITIVITY = 64

_FRACTION_RE = re.compile(r"(0?)\.([0-9]+)\Z")
_REAL_RE = re.compile(r"([0-9]+)(?:\.([0-9]+))?\Z")


def _parse_fraction(text: str) -> tuple[int, int]:
    # Returns the fraction as numerator / 10**k. Only values in [0, 1).
    t = text.strip()
    if t == "0":
        return 0, 1
    m = _FRACTION_RE.match(t)
    if not m:
        raise ValueError(f"not a decimal fraction in [0, 1): {text!r}")
    digits = m.group(2)
    return int(digits), 10 ** len(digits)


def dec2binary(text: str, sensitivity: int = DEFAULT_SENSITIVITY) -> list[int]:
    """Negative exponent list for a decimal fraction string in [0, 1).

    The fraction d/10**k is doubled step by step; every time it reaches 1
    an exponent is emitted and the overflow subtracted. Stops when the
    remainder hits zero or sensitivity exponents have been produced, so
    the result is truncated, never rounded: dec2binary("0.1", 4) gives
    [-4, -5, -8, -9].
    """
    if sensitivity < 1:
        raise ValueError("sensitivity must be >= 1")
    num, den = _parse_fraction(text)
    out: list[int] = []
    exponent = 0
    while num and len(out) < sensitivity:
        exponent += 1
        num *= 2
        if num >= den:
            out.append(-exponent)
            num -= den
    return out


def reconstruct_fraction(entries: Sequence[int]) -> str:
    """Exact decimal expansion of a negative exponent list, as text.

    reconstruct_fraction([-2, -3, -6]) == "0.390625"; the empty list gives
    "0". Exactness holds because every dyadic rational terminates in
    decimal.
    """
    if not entries:
        return "0"
    if any(e >= 0 for e in entries):
        raise ValueError("fraction indexes must be negative")
    if any(entries[k] <= entries[k + 1] for k in range(len(entries) - 1)):
        raise ValueError("fraction indexes must be strictly decreasing")
    p = -min(entries)
    num = sum(1 << (p + e) for e in entries)
    # num is odd (the lowest exponent contributes the unit), so the final
    # digit of num * 5**p is never zero and the expansion is already minimal.
    digits = str(num * 5**p).rjust(p, "0")
    return "0." + digits


def deconstruct_real(text: str, sensitivity: int = DEFAULT_SENSITIVITY) -> tuple[list[int], list[int]]:
    """Split a decimal real "I.F" into integer and fraction exponent lists.

    deconstruct_real("97.5", 64) == ([6, 5, 0], [-1]). A missing fraction
    part yields an empty fraction list; "0.0" gives ([], []).
    """
    t = text.strip()
    m = _REAL_RE.match(t)
    if not m:
        raise ValueError(f"not an unsigned decimal real: {text!r}")
    whole = int(m.group(1))
    frac_digits = m.group(2)
    if frac_digits is None:
        return deconstruct(whole), []
    return deconstruct(whole), dec2binary("0." + frac_digits, sensitivity)

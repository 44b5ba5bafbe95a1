"""Dense positional baselines to compare the index representation against.

Three multipliers over fixed-width little-endian limbs: schoolbook long
multiplication, Karatsuba with a schoolbook cutoff, and an iterative
number-theoretic transform. All three are implemented here rather than
delegated to a big-number library so that every timed comparator shares
the same language and runtime discipline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_LIMB_WIDTH = 32
DEFAULT_KARATSUBA_CUTOFF = 32

# 119 * 2**23 + 1, prime, with 3 as a primitive root: supports power-of-two
# transform lengths up to 2**23.
NTT_MODULUS = 998244353
NTT_GENERATOR = 3
NTT_MAX_LOG = 23

# Operands are split into 8-bit coefficients for the transform. A convolution
# column then sums at most min(la, lb) products bounded by 255**2, and the
# column total must stay below the modulus for exact recovery; 8-bit chunks
# keep that true out to roughly 2**16-bit operands, 16-bit chunks would
# overflow the modulus on a single product.
NTT_CHUNK_BITS = 8


class NttCapacityError(ValueError):
    """The requested transform exceeds what the fixed modulus can carry."""


@dataclass(frozen=True)
class LimbNumber:
    """Unsigned integer as fixed-width little-endian limbs.

    Zero is the empty tuple (a lone zero limb is tolerated on input). The
    most significant limb is otherwise nonzero.
    """

    limbs: tuple[int, ...]
    width: int = DEFAULT_LIMB_WIDTH

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("limb width must be >= 1")
        bound = 1 << self.width
        if any(l < 0 or l >= bound for l in self.limbs):
            raise ValueError("limb out of range for width")
        if len(self.limbs) > 1 and self.limbs[-1] == 0:
            raise ValueError("leading zero limb")

    @classmethod
    def from_int(cls, n: int, width: int = DEFAULT_LIMB_WIDTH) -> "LimbNumber":
        if n < 0:
            raise ValueError("LimbNumber holds unsigned values")
        if width < 1:
            # Checked before the chop loop; a zero width would never shift n down.
            raise ValueError("limb width must be >= 1")
        limbs = []
        mask = (1 << width) - 1
        while n:
            limbs.append(n & mask)
            n >>= width
        return cls(tuple(limbs), width)

    def to_int(self) -> int:
        n = 0
        for limb in reversed(self.limbs):
            n = (n << self.width) | limb
        return n

    def __len__(self) -> int:
        return len(self.limbs)


def _check_widths(a: LimbNumber, b: LimbNumber) -> None:
    if a.width != b.width:
        raise ValueError(f"limb widths differ: {a.width} vs {b.width}")


def _strip(limbs: list[int]) -> tuple[int, ...]:
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return tuple(limbs)


def _school_limbs(x: list[int] | tuple[int, ...], y: list[int] | tuple[int, ...], width: int) -> list[int]:
    # Plain O(len(x) * len(y)) long multiplication on limb lists.
    if not x or not y:
        return []
    mask = (1 << width) - 1
    res = [0] * (len(x) + len(y))
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        carry = 0
        for j, yj in enumerate(y):
            t = res[i + j] + xi * yj + carry
            res[i + j] = t & mask
            carry = t >> width
        k = i + len(y)
        while carry:
            t = res[k] + carry
            res[k] = t & mask
            carry = t >> width
            k += 1
    return res


def schoolbook_mul(a: LimbNumber, b: LimbNumber) -> LimbNumber:
    """Long multiplication: every limb of a against every limb of b."""
    _check_widths(a, b)
    return LimbNumber(_strip(_school_limbs(a.limbs, b.limbs, a.width)), a.width)


def _add_limbs(x: list[int], y: list[int], width: int) -> list[int]:
    mask = (1 << width) - 1
    if len(x) < len(y):
        x, y = y, x
    out = []
    carry = 0
    for i, xi in enumerate(x):
        t = xi + (y[i] if i < len(y) else 0) + carry
        out.append(t & mask)
        carry = t >> width
    if carry:
        out.append(carry)
    return out


def _sub_limbs(x: list[int], y: list[int], width: int) -> list[int]:
    # Requires x >= y; holds for the middle Karatsuba term by construction.
    mask = (1 << width) - 1
    out = []
    borrow = 0
    for i, xi in enumerate(x):
        t = xi - borrow - (y[i] if i < len(y) else 0)
        borrow = 1 if t < 0 else 0
        out.append(t & mask)
    if borrow:
        raise ValueError("limb subtraction went negative")
    return out


def _add_into(res: list[int], part: list[int], offset: int, width: int) -> None:
    mask = (1 << width) - 1
    carry = 0
    k = offset
    for limb in part:
        t = res[k] + limb + carry
        res[k] = t & mask
        carry = t >> width
        k += 1
    while carry:
        t = res[k] + carry
        res[k] = t & mask
        carry = t >> width
        k += 1


def karatsuba_mul(a: LimbNumber, b: LimbNumber, cutoff: int = DEFAULT_KARATSUBA_CUTOFF) -> LimbNumber:
    """Karatsuba split-multiply, falling back to schoolbook at the cutoff.

    The three-recursion identity trades one multiplication of the halves
    for a handful of limb additions; below the cutoff the bookkeeping costs
    more than it saves, so small operands go straight to schoolbook.
    """
    _check_widths(a, b)
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    width = a.width

    def go(x: list[int], y: list[int]) -> list[int]:
        if not x or not y:
            return []
        if min(len(x), len(y)) <= cutoff:
            return _school_limbs(x, y, width)
        m = min(len(x), len(y)) // 2
        x0, x1 = x[:m], x[m:]
        y0, y1 = y[:m], y[m:]
        z0 = go(x0, y0)
        z2 = go(x1, y1)
        zm = go(_add_limbs(x0, x1, width), _add_limbs(y0, y1, width))
        z1 = _sub_limbs(zm, _add_limbs(z0, z2, width), width)
        res = [0] * (len(x) + len(y) + 1)
        _add_into(res, z0, 0, width)
        _add_into(res, z1, m, width)
        _add_into(res, z2, 2 * m, width)
        return res

    return LimbNumber(_strip(go(list(a.limbs), list(b.limbs))), width)


@dataclass(frozen=True, eq=False)
class NttPlan:
    """Precomputed transform of a fixed power-of-two length.

    Holds the bit-reversal permutation and per-level twiddle tables for both
    directions. Treat all arrays as read-only.
    """

    length: int
    modulus: int
    root: int
    inv_root: int
    inv_length: int
    bitrev: np.ndarray = field(repr=False)
    twiddles: tuple[np.ndarray, ...] = field(repr=False)
    inv_twiddles: tuple[np.ndarray, ...] = field(repr=False)


def _power_table(base: int, count: int, modulus: int) -> np.ndarray:
    # out[k] = base**k mod modulus, built by binary decomposition of k so the
    # whole table costs O(count * log count) vector ops.
    out = np.ones(count, dtype=np.int64)
    k = np.arange(count, dtype=np.int64)
    sq = base % modulus
    bit = 0
    while (1 << bit) < count:
        sel = ((k >> bit) & 1) == 1
        out[sel] = out[sel] * sq % modulus
        sq = sq * sq % modulus
        bit += 1
    return out


def _bit_reverse_permutation(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for shift in range(bits):
        rev = (rev << 1) | ((idx >> shift) & 1)
    return rev


@lru_cache(maxsize=None)
def _plan_for_length(length: int) -> NttPlan:
    p = NTT_MODULUS
    root = pow(NTT_GENERATOR, (p - 1) // length, p)
    if pow(root, length, p) != 1:
        raise NttCapacityError(f"no order-{length} root under modulus {p}")
    if length > 1 and pow(root, length // 2, p) != p - 1:
        raise NttCapacityError(f"root is not primitive for length {length}")
    inv_root = pow(root, p - 2, p)
    twiddles = []
    inv_twiddles = []
    half = 1
    while half < length:
        step = pow(root, length // (2 * half), p)
        inv_step = pow(inv_root, length // (2 * half), p)
        twiddles.append(_power_table(step, half, p))
        inv_twiddles.append(_power_table(inv_step, half, p))
        half *= 2
    return NttPlan(
        length=length,
        modulus=p,
        root=root,
        inv_root=inv_root,
        inv_length=pow(length, p - 2, p),
        bitrev=_bit_reverse_permutation(length),
        twiddles=tuple(twiddles),
        inv_twiddles=tuple(inv_twiddles),
    )


def plan_ntt(max_coeff_count: int) -> NttPlan:
    """Plan a transform able to hold max_coeff_count convolution outputs.

    The length is the next power of two at or above the request; the fixed
    modulus supports lengths up to 2**23 and anything beyond raises.
    """
    if max_coeff_count < 1:
        raise ValueError("coefficient count must be >= 1")
    length = 1 << (max_coeff_count - 1).bit_length()
    if length > (1 << NTT_MAX_LOG):
        raise NttCapacityError(
            f"transform length {length} exceeds 2**{NTT_MAX_LOG} supported by modulus {NTT_MODULUS}"
        )
    return _plan_for_length(length)


def _transform(values: np.ndarray, plan: NttPlan, inverse: bool) -> np.ndarray:
    p = plan.modulus
    arr = np.asarray(values, dtype=np.int64) % p
    if arr.shape != (plan.length,):
        raise ValueError(f"expected {plan.length} coefficients, got {arr.shape}")
    arr = arr[plan.bitrev]
    tables = plan.inv_twiddles if inverse else plan.twiddles
    half = 1
    level = 0
    while half < plan.length:
        tw = tables[level]
        block = arr.reshape(-1, 2 * half)
        u = block[:, :half]
        v = block[:, half:] * tw % p
        s = (u + v) % p
        d = (u - v) % p
        block[:, :half] = s
        block[:, half:] = d
        arr = block.reshape(-1)
        half *= 2
        level += 1
    if inverse:
        arr = arr * plan.inv_length % p
    return arr


def forward_ntt(values: np.ndarray, plan: NttPlan) -> np.ndarray:
    """Forward transform of exactly plan.length coefficients."""
    return _transform(values, plan, inverse=False)


def inverse_ntt(values: np.ndarray, plan: NttPlan) -> np.ndarray:
    """Inverse transform; inverse_ntt(forward_ntt(x)) == x mod the modulus."""
    return _transform(values, plan, inverse=True)


def _to_chunks(n: int) -> np.ndarray:
    # 8-bit coefficient vector, little-endian. n must be > 0.
    raw = n.to_bytes((n.bit_length() + 7) // 8, "little")
    return np.frombuffer(raw, dtype=np.uint8).astype(np.int64)


def _chunks_to_int(coeffs: np.ndarray) -> int:
    # Convolution columns are < 2**30, so four byte planes cover them; the
    # big-integer additions absorb all carries at once.
    total = 0
    for shift in range(4):
        plane = ((coeffs >> (8 * shift)) & 0xFF).astype(np.uint8).tobytes()
        total += int.from_bytes(plane, "little") << (8 * shift)
    return total


def ntt_mul(a: LimbNumber, b: LimbNumber) -> LimbNumber:
    """Multiply via the number-theoretic transform.

    Operands are re-chunked to 8-bit coefficients, transformed, multiplied
    pointwise and transformed back. Raises NttCapacityError when a
    convolution column could reach the modulus, since exactness would be
    lost.
    """
    _check_widths(a, b)
    ai, bi = a.to_int(), b.to_int()
    if ai == 0 or bi == 0:
        return LimbNumber((), a.width)
    ca, cb = _to_chunks(ai), _to_chunks(bi)
    max_chunk = (1 << NTT_CHUNK_BITS) - 1
    if min(len(ca), len(cb)) * max_chunk * max_chunk >= NTT_MODULUS:
        raise NttCapacityError("operands too large for exact convolution under the fixed modulus")
    plan = plan_ntt(len(ca) + len(cb))
    fa = forward_ntt(np.pad(ca, (0, plan.length - len(ca))), plan)
    fb = forward_ntt(np.pad(cb, (0, plan.length - len(cb))), plan)
    conv = inverse_ntt(fa * fb % plan.modulus, plan)
    return LimbNumber.from_int(_chunks_to_int(conv), a.width)

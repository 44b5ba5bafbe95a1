"""Exponent-list representation: conversions in and out."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indexradix.index_repr import (
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

from vectors import (
    RSA100_FACTOR_A,
    RSA100_FACTOR_A_INDEXES,
    RSA100_FACTOR_B,
    RSA100_FACTOR_B_INDEXES,
    RSA100_SEMIPRIME,
    RSA100_SEMIPRIME_INDEXES,
)

nonneg_ints = st.integers(min_value=0, max_value=2**4096)


def test_deconstruct_samples():
    assert deconstruct(0) == []
    assert deconstruct(1) == [0]
    assert deconstruct(17) == [4, 0]
    assert deconstruct(21) == [4, 2, 0]
    assert deconstruct(97) == [6, 5, 0]
    assert deconstruct(2**62) == [62]


def test_deconstruct_rejects_negative():
    with pytest.raises(ValueError):
        deconstruct(-1)


def test_deconstruct_known_semiprime_vectors():
    assert deconstruct(RSA100_SEMIPRIME) == RSA100_SEMIPRIME_INDEXES
    assert deconstruct(RSA100_FACTOR_A) == RSA100_FACTOR_A_INDEXES
    assert deconstruct(RSA100_FACTOR_B) == RSA100_FACTOR_B_INDEXES
    assert reconstruct_sum(RSA100_SEMIPRIME_INDEXES) == RSA100_SEMIPRIME


@given(nonneg_ints)
@settings(max_examples=300)
def test_roundtrip_sum(n):
    assert reconstruct_sum(deconstruct(n)) == n


@given(st.integers(min_value=0, max_value=2**512))
@settings(max_examples=150)
def test_roundtrip_strings(n):
    assert reconstruct_strings(deconstruct(n)) == n


@given(nonneg_ints)
@settings(max_examples=300)
def test_deconstruct_is_canonical_and_popcount_length(n):
    out = deconstruct(n)
    assert is_canonical(out)
    assert len(out) == bin(n).count("1")


def test_reconstruct_sum_tolerates_duplicates_and_order():
    # 17 + 21 handed over as one raw bag.
    assert reconstruct_sum([4, 0, 4, 2, 0]) == 38
    assert reconstruct_sum([0, 2, 4, 0, 4]) == 38
    assert reconstruct_sum([]) == 0


def test_reconstruct_rejects_negative_indexes():
    with pytest.raises(ValueError):
        reconstruct_sum([3, -1])
    with pytest.raises(ValueError):
        reconstruct_strings([-2])


def test_divide_by_2_examples():
    assert divide_by_2(0) == []
    assert divide_by_2(15) == [1, 1, 1, 1]
    assert divide_by_2(38) == [0, 1, 1, 0, 0, 1]
    with pytest.raises(ValueError):
        divide_by_2(-3)


@given(st.integers(min_value=0, max_value=2**256))
@settings(max_examples=200)
def test_divide_by_2_agrees_with_deconstruct(n):
    bits = divide_by_2(n)
    assert [i for i, bit in enumerate(bits) if bit] == deconstruct(n)[::-1]


def test_ilog2():
    assert ilog2(1) == 0
    assert ilog2(2) == 1
    assert ilog2(97) == 6
    # Exact at widths where float log2 would misplace the top bit.
    assert ilog2(2**64 - 1) == 63
    assert ilog2(2**64) == 64
    with pytest.raises(ValueError):
        ilog2(0)


def test_is_canonical():
    assert is_canonical([])
    assert is_canonical([6, 5, 0])
    assert not is_canonical([5, 5])
    assert not is_canonical([0, 5])
    assert not is_canonical([3, -1])
    assert not is_canonical([INDEX_LIMIT])


def test_parse_number():
    assert parse_number("97") == 97
    assert parse_number("0x61") == 97
    assert parse_number("0X61") == 97
    assert parse_number(" 42 ") == 42
    assert parse_number("61", radix="decimal") == 61
    assert parse_number("0x61", radix="hex") == 97


@pytest.mark.parametrize(
    "bad",
    ["", "  ", "-1", "4 2", "0x", "0xg1", "1.5", "1_000", "abc"],
)
def test_parse_number_rejects(bad):
    with pytest.raises(ValueError):
        parse_number(bad)


def test_parse_number_rejects_wrong_radix_hint():
    with pytest.raises(ValueError):
        parse_number("97", radix="octal")
    with pytest.raises(ValueError):
        parse_number("97", radix="hex")


@given(nonneg_ints, st.booleans())
@settings(max_examples=100)
def test_format_parse_roundtrip(n, use_hex):
    assert parse_number(format_number(n, use_hex)) == n


def test_dump_and_parse_indexes():
    assert dump_indexes([6, 5, 0]) == "[6,5,0]"
    assert dump_indexes([]) == "[]"
    assert parse_indexes("[6,5,0]") == [6, 5, 0]
    assert parse_indexes("6,5,0") == [6, 5, 0]
    assert parse_indexes(" [ -2 , -3 ] ".replace(" ", "")) == [-2, -3]
    assert parse_indexes("-2,-3,-6") == [-2, -3, -6]
    assert parse_indexes("[]") == []
    assert parse_indexes("") == []


@pytest.mark.parametrize("bad", ["[1,", "[1.5]", "[true]", "a,b", '["3"]', "{}"])
def test_parse_indexes_rejects(bad):
    with pytest.raises(ValueError):
        parse_indexes(bad)


@given(st.lists(st.integers(min_value=0, max_value=10_000), unique=True))
@settings(max_examples=100)
def test_indexes_text_roundtrip(entries):
    entries.sort(reverse=True)
    assert parse_indexes(dump_indexes(entries)) == entries

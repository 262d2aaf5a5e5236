"""Run-length encoding, binomials and the run-merging transformation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delseq import (
    Rle,
    apply_g,
    binomial,
    complement,
    g_chain,
    hamming_weight,
    reverse,
    rle_decode,
    rle_encode,
)

bits = st.text(alphabet="01", max_size=16)


def test_rle_encode_known_values():
    assert rle_encode("0011010001") == Rle(0, (2, 2, 1, 1, 3, 1))
    assert rle_encode("") == Rle(None, ())
    assert rle_encode("11111") == Rle(1, (5,))


def test_rle_decode_known_values():
    assert rle_decode(Rle(0, (2, 2, 1, 1, 3, 1))) == "0011010001"
    assert rle_decode(Rle(1, (5,))) == "11111"
    assert rle_decode(Rle(0, (1, 1, 1))) == "010"
    assert rle_decode(Rle(None, ())) == ""


def test_rle_validation():
    with pytest.raises(ValueError):
        Rle(2, (1,))
    with pytest.raises(ValueError):
        Rle(0, (1, 0))
    with pytest.raises(ValueError):
        Rle(None, (1,))
    with pytest.raises(ValueError):
        Rle(0, ())
    with pytest.raises(ValueError):
        rle_encode("012")


@given(bits)
def test_rle_round_trip(s):
    assert rle_decode(rle_encode(s)) == s


@given(bits)
def test_rle_runs_alternate_and_cover(s):
    r = rle_encode(s)
    assert sum(r.runs) == len(s)
    assert all(b >= 1 for b in r.runs)
    # uniqueness of the encoding = no two adjacent runs share a symbol
    symbols = [r.symbol(i) for i in range(1, r.block_count + 1)]
    assert all(a != b for a, b in zip(symbols, symbols[1:]))


@given(bits)
def test_complement_only_flips_first_symbol(s):
    r, rc = rle_encode(s), rle_encode(complement(s))
    assert r.runs == rc.runs
    if s:
        assert rc.first == r.first ^ 1


def test_hamming_weight():
    assert hamming_weight("110") == 2
    assert hamming_weight("00000") == 0
    assert hamming_weight("0011010001") == 4


def test_reverse_and_complement():
    assert reverse("110") == "011"
    assert complement("110") == "001"


def test_binomial_values():
    assert binomial(5, 3) == 10
    assert binomial(4, 7) == 0
    assert binomial(9, 5) == 126
    assert binomial(0, 0) == 1
    assert binomial(10, -1) == 0
    # empty-product convention, needed by sums whose upper index may go negative
    assert binomial(-1, 0) == 1


def test_binomial_matches_factorial_form():
    from math import comb

    for n in range(0, 40):
        for k in range(0, n + 1):
            assert binomial(n, k) == comb(n, k)


def test_apply_g_merges_first_two_runs():
    assert apply_g(rle_encode("1001110")) == rle_encode("0001110")
    assert apply_g(Rle(0, (7,))) == Rle(0, (7,))
    assert apply_g(rle_encode("101010")) == rle_encode("001010")


@given(bits.filter(lambda s: len(s) > 0))
def test_apply_g_properties(s):
    r = rle_encode(s)
    g = apply_g(r)
    assert g.length == r.length
    if r.block_count > 1:
        assert g.block_count == r.block_count - 1
    else:
        assert g == r


@given(bits.filter(lambda s: len(s) > 0))
def test_g_chain_reaches_constant_in_blockcount_steps(s):
    r = rle_encode(s)
    chain = g_chain(r)
    assert len(chain) == r.block_count
    assert chain[-1].block_count == 1

"""The vectorized whole-space engine against the scalar implementations."""

import numpy as np
import pytest

from delseq import EnumerationCapExceeded, canonical_embedding, count_embeddings_dp
from delseq.exhaustive import (
    all_hamming_weights,
    all_weights,
    greedy_match_stats,
    string_of_index,
)


def all_strings(n):
    return [format(i, f"0{n}b") for i in range(1 << n)] if n else [""]


def test_string_of_index():
    assert string_of_index(5, 4) == "0101"
    assert string_of_index(0, 0) == ""


def test_all_weights_matches_dp():
    for n in range(0, 9):
        ys = all_strings(n)
        for x in ("", "0", "10", "110", "0101"):
            if len(x) > n:
                continue
            w = all_weights(x, n)
            assert w.shape == (1 << n,)
            for i, y in enumerate(ys):
                assert int(w[i]) == count_embeddings_dp(x, y)


def test_all_hamming_weights():
    for n in range(0, 9):
        h = all_hamming_weights(n)
        for i, y in enumerate(all_strings(n)):
            assert int(h[i]) == y.count("1")


def test_greedy_match_stats_matches_canonical():
    for n in range(1, 9):
        ys = all_strings(n)
        for x in ("0", "11", "010", "1011"):
            if len(x) > n:
                continue
            present, maximal = greedy_match_stats(x, n)
            for i, y in enumerate(ys):
                mask = canonical_embedding(x, y)
                assert bool(present[i]) == (mask is not None)
                assert bool(maximal[i]) == (mask is not None and mask[-1] == n)


def test_cap_enforced():
    with pytest.raises(EnumerationCapExceeded):
        all_weights("1", 25)
    assert all_weights("1", 5, max_bits=5).sum() == 5 * 2**4


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("DELSEQ_MAX_BITS", "3")
    with pytest.raises(EnumerationCapExceeded):
        all_weights("1", 4)
    monkeypatch.setenv("DELSEQ_MAX_BITS", "4")
    assert all_weights("1", 4).shape == (16,)

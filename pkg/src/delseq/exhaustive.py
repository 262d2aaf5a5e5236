"""Vectorized whole-space enumeration over all 2^n strings of length n.

These routines are the brute-force side of every dual-route check in the
package: they compute per-string quantities for the entire space at once
(strings are indexed by their value as an MSB-first binary number).  Results
are exact: the embedding counts fit comfortably in int64 for any enumerable
n, and callers convert to Python ints at the boundary.

Full enumeration refuses to run above a size cap (default 22 bits) rather
than silently thrash; override with the ``max_bits`` argument or the
DELSEQ_MAX_BITS environment variable.
"""
from __future__ import annotations

import os

import numpy as np

from .core import check_bits

DEFAULT_MAX_BITS = 22
MAX_BITS_ENV = "DELSEQ_MAX_BITS"


class EnumerationCapExceeded(Exception):
    """Raised when an operation would enumerate more strings than allowed."""


def resolve_max_bits(max_bits: int | None = None) -> int:
    if max_bits is not None:
        return max_bits
    env = os.environ.get(MAX_BITS_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_BITS


def check_enumerable(n: int, max_bits: int | None = None) -> None:
    cap = resolve_max_bits(max_bits)
    if n > cap:
        raise EnumerationCapExceeded(
            f"enumerating 2^{n} strings exceeds the cap of {cap} bits"
        )


def string_of_index(i: int, n: int) -> str:
    """The length-n bit string whose MSB-first value is i."""
    return format(i, f"0{n}b") if n else ""


def bit_columns(n: int):
    """Yield, for j = 1..n, the j-th bit (MSB first) of every index 0..2^n-1."""
    idx = np.arange(1 << n, dtype=np.int64)
    for j in range(n):
        yield ((idx >> (n - 1 - j)) & 1).astype(np.int64)


def all_weights(x: str, n: int, max_bits: int | None = None) -> np.ndarray:
    """omega_x(y) for every y of length n, as an int64 array indexed by y."""
    check_bits(x)
    check_enumerable(n, max_bits)
    m = len(x)
    size = 1 << n
    w = [np.ones(size, dtype=np.int64)]
    w += [np.zeros(size, dtype=np.int64) for _ in range(m)]
    xs = [int(c) for c in x]
    for col in bit_columns(n):
        for i in range(m, 0, -1):
            np.add(w[i], np.where(col == xs[i - 1], w[i - 1], 0), out=w[i])
    return w[m]


def all_hamming_weights(n: int) -> np.ndarray:
    """h(y) for every y of length n."""
    size = 1 << n
    h = np.zeros(size, dtype=np.int64)
    for col in bit_columns(n):
        h += col
    return h


def greedy_match_stats(x: str, n: int, max_bits: int | None = None):
    """Canonical-embedding facts for every y of length n.

    Returns ``(present, maximal)`` boolean arrays: ``present[y]`` iff x embeds
    in y at all (the greedy left-to-right match completes), ``maximal[y]`` iff
    the canonical embedding's last position is position n.
    """
    check_bits(x)
    check_enumerable(n, max_bits)
    m = len(x)
    size = 1 << n
    if m == 0:
        return np.ones(size, dtype=bool), np.zeros(size, dtype=bool)
    # sentinel entry keeps the gather in range once a match is complete
    xs = np.array([int(c) for c in x] + [2], dtype=np.int64)
    matched = np.zeros(size, dtype=np.int64)
    before_last = matched
    for j, col in enumerate(bit_columns(n)):
        if j == n - 1:
            before_last = matched.copy()
        matched += xs[matched] == col
    present = matched == m
    return present, present & (before_last == m - 1)

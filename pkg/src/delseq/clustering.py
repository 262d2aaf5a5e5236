"""Hamming-weight clusters, maximal initial embeddings and singleton counts.

Cluster c of the uncertainty set holds the supersequences with exactly c
ones more than x.  Its size depends only on (n, m, h(x), c) and is computed
here three ways: a closed-form sum, a recurrence on the head of x, and (in
the test suite) a brute-force census.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import binomial, check_bits
from .embeddings import Mask


def canonical_embedding(x: str, y: str) -> Mask | None:
    """The lexicographically first mask of x in y, or None if there is none.

    Greedy left-to-right matching yields exactly the lexicographic minimum.
    """
    check_bits(x)
    check_bits(y)
    mask = []
    pos = 0
    for c in x:
        pos = y.find(c, pos) + 1
        if pos == 0:
            return None
        mask.append(pos)
    return tuple(mask)


def is_maximal_initial(x: str, y: str) -> bool:
    """True iff the canonical embedding of x ends on the last position of y."""
    mask = canonical_embedding(x, y)
    return mask is not None and len(mask) > 0 and mask[-1] == len(y)


def maximal_initials_total(n: int, m: int) -> int:
    """Number of supersequences whose canonical embedding is maximal: C(n-1, m-1)."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got n={n} m={m}")
    return binomial(n - 1, m - 1)


def maximal_initials_cluster(n: int, m: int, hx: int, c: int) -> int:
    """Maximal-initial count within cluster c, for any x with h(x) = hx.

    Stars and bars twice: distribute the surplus zeros among the ones of x
    and the surplus ones among the zeros of x, holding the final position
    fixed.
    """
    _check_cluster_args(n, m, hx, c)
    if m == 0:
        raise ValueError("maximal initials are defined for nonempty x")
    p = n - m - c
    return binomial(p + hx - 1, p) * binomial(c + (m - hx) - 1, c)


def cluster_size_closed(n: int, m: int, hx: int, c: int) -> int:
    """Size of cluster c for any x of length m with h(x) = hx.

    Sums over the position p of the hx-th one of y; the strings counted are
    those of weight hx + c whose hx-th one leaves room for the zeros of x.
    """
    _check_cluster_args(n, m, hx, c)
    if hx == 0:
        return binomial(n, c)
    z = n - m - c
    return sum(
        binomial(p - 1, hx - 1) * binomial(n - p, c)
        for p in range(hx, hx + z + 1)
    )


def cluster_size_recurrence(n: int, x: str, c: int) -> int:
    """Size of cluster c computed by recursing on the first bit of y.

    Matching a leading 0 of x consumes it without changing c; a leading
    surplus symbol consumes c only when x starts with 0 (the surplus bit is
    then a one).  Out-of-range arguments (c < 0 or c + |x| > n) yield 0, as
    in the recursion's own base cases.
    """
    check_bits(x)
    memo: dict[tuple[int, int, int], int] = {}

    def size(n: int, i: int, c: int) -> int:
        if c < 0:
            return 0
        rest = len(x) - i
        if c + rest > n:
            return 0
        if rest == 0:
            return binomial(n, c)
        key = (n, i, c)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if x[i] == "0":
            result = size(n - 1, i + 1, c) + size(n - 1, i, c - 1)
        else:
            result = size(n - 1, i + 1, c) + size(n - 1, i, c)
        memo[key] = result
        return result

    return size(n, 0, c)


def _check_cluster_args(n: int, m: int, hx: int, c: int) -> None:
    if m > n or m < 0:
        raise ValueError(f"need 0 <= m <= n, got n={n} m={m}")
    if not 0 <= hx <= m:
        raise ValueError(f"need 0 <= h(x) <= m, got h(x)={hx} m={m}")
    if not 0 <= c <= n - m:
        raise ValueError(f"cluster index {c} outside [0, {n - m}]")


@dataclass(frozen=True)
class RhoProfile:
    """Insertion-slot counts of x: rho0 over its 0-runs, rho1 over its 1-runs."""

    rho0: int
    rho1: int

    @property
    def total(self) -> int:
        return self.rho0 + self.rho1


def rho(x: str) -> RhoProfile:
    """Count the weight-preserving insertion slots of x, per symbol.

    A run touching both ends of x contributes its length + 1; a run touching
    exactly one end its length; an interior run its length - 1.
    """
    check_bits(x)
    if not x:
        raise ValueError("rho is undefined for the empty string")
    m = len(x)
    slots = [0, 0]
    start = 0
    while start < m:
        end = start
        while end + 1 < m and x[end + 1] == x[start]:
            end += 1
        length = end - start + 1
        touches = (start == 0) + (end == m - 1)
        slots[int(x[start])] += length + touches - 1
        start = end + 1
    return RhoProfile(rho0=slots[0], rho1=slots[1])


def count_singletons(n: int, x: str) -> int:
    """Number of length-n supersequences embedding x exactly once.

    Closed form C(n-m + rho1 + rho0 - 1, n-m): every singleton arises from
    x by weight-preserving insertions into the available slots.
    """
    check_bits(x)
    if not x:
        raise ValueError("singleton count is undefined for the empty string")
    m = len(x)
    if m > n:
        raise ValueError(f"need |x| <= n, got |x|={m} n={n}")
    r = rho(x)
    return binomial(n - m + r.total - 1, n - m)

"""Counting and enumerating the embeddings of x in y by three methods.

An embedding (mask) of x in y is a strictly increasing tuple of 1-based
positions pi with y restricted to pi equal to x.  The three routes to the
embedding count omega_x(y) are kept deliberately independent so they can
cross-check each other:

* ``enumerate_masks``   -- brute-force enumeration (the oracle),
* ``count_embeddings_dp``   -- the classic distinct-occurrence DP,
* ``count_embeddings_runs`` -- summation over block maps of the run-length
  encodings, grouping masks by which run of y hosts the end of each run of x.
"""
from __future__ import annotations

from itertools import accumulate

from .core import Rle, binomial, check_bits, rle_encode

Mask = tuple[int, ...]
BlockMap = tuple[int, ...]


def enumerate_masks(x: str, y: str) -> list[Mask]:
    """All masks of x in y, in lexicographic order.

    Returns the single empty mask for empty x and an empty list when x does
    not embed in y.
    """
    check_bits(x)
    check_bits(y)
    m, n = len(x), len(y)
    if m > n:
        return []
    if m == 0:
        return [()]
    out: list[Mask] = []
    prefix: list[int] = []

    def extend(i: int, start: int) -> None:
        # positions beyond n - (m - i) leave too few characters to finish
        if i == m:
            out.append(tuple(prefix))
            return
        for p in range(start, n - (m - i) + 2):
            if y[p - 1] == x[i]:
                prefix.append(p)
                extend(i + 1, p + 1)
                prefix.pop()

    extend(0, 1)
    return out


def count_embeddings_dp(x: str, y: str) -> int:
    """omega_x(y) via the recurrence W(i,j) = W(i,j-1) + [x_i = y_j] W(i-1,j-1)."""
    check_bits(x)
    check_bits(y)
    m = len(x)
    if m > len(y):
        return 0
    w = [1] + [0] * m
    for c in y:
        for i in range(m, 0, -1):
            if x[i - 1] == c:
                w[i] += w[i - 1]
    return w[m]


def block_maps(x_rle: Rle, y_rle: Rle) -> list[BlockMap]:
    """All strictly increasing maps f from x's runs to y's runs with f(i) = i mod 2.

    Requires x and y to start with the same symbol (strip y's first run
    beforehand if they do not); the parity condition then makes f map each
    run of x onto a run of y of the same symbol.
    """
    lp = x_rle.block_count
    l = y_rle.block_count
    if lp and l and x_rle.first != y_rle.first:
        raise ValueError("x and y must start with the same symbol")
    if lp == 0:
        return [()]
    maps: list[BlockMap] = []
    f: list[int] = []

    def extend(i: int, lo: int) -> None:
        if i > lp:
            maps.append(tuple(f))
            return
        # remaining runs i..lp need images <= l with alternating parity
        for v in range(lo, l - (lp - i) + 1, 2):
            f.append(v)
            extend(i + 1, v + 1)
            f.pop()

    extend(1, 1)
    return maps


def sigma(lp: int, l: int) -> int:
    """Number of block maps: C(lp + u, u) with u = (l~ - lp) / 2."""
    lt = l if (l - lp) % 2 == 0 else l - 1
    u = (lt - lp) // 2
    if u < 0:
        return 0
    return binomial(lp + u, u)


def _align_rles(x: str, y: str) -> tuple[Rle, Rle] | None:
    """RLEs of x and y with y's first run stripped on a symbol mismatch."""
    rx = rle_encode(x)
    ry = rle_encode(y)
    if rx.first is not None and ry.first is not None and rx.first != ry.first:
        if ry.block_count == 1:
            return None
        ry = Rle(ry.first ^ 1, ry.runs[1:])
    if rx.length > ry.length:
        return None
    return rx, ry


def _block_map_count(f: BlockMap, kx: tuple[int, ...], ky: tuple[int, ...]) -> int:
    """Size of the mask group for a single block map f.

    After deleting the opposite-symbol runs strictly between f(i-1) and f(i),
    the same-symbol runs {f(i-1)+1, f(i-1)+3, ..., f(i)} of y merge into one
    run; the factor for run i of x counts the ways to pick its k'_i symbols
    there while keeping run f(i) non-empty in the mask.
    """
    total = 1
    prev = 0
    for i, fi in enumerate(f, start=1):
        s = sum(ky[j - 1] for j in range(prev + 1, fi + 1, 2))
        need = kx[i - 1]
        term = binomial(s, need) - binomial(s - ky[fi - 1], need)
        if term == 0:
            return 0
        total *= term
        prev = fi
    return total


def embedding_counts_by_block_map(x: str, y: str) -> list[tuple[BlockMap, int]]:
    """The per-block-map decomposition of omega_x(y).

    When x and y start with different symbols the maps refer to y with its
    first run removed, which hosts no mask position in that case.
    """
    check_bits(x)
    check_bits(y)
    if not x:
        return [((), 1)]
    aligned = _align_rles(x, y)
    if aligned is None:
        return []
    rx, ry = aligned
    return [
        (f, _block_map_count(f, rx.runs, ry.runs)) for f in block_maps(rx, ry)
    ]


def count_embeddings_runs(x: str, y: str) -> int:
    """omega_x(y) as the sum of the per-block-map group sizes."""
    return sum(c for _, c in embedding_counts_by_block_map(x, y))


def block_map_of_mask(mask: Mask, x_rle: Rle, y_rle: Rle) -> BlockMap:
    """The block map a given mask of x in y belongs to.

    f(i) is the run of y containing the mask position matching the last
    symbol of run i of x.  Assumes x and y start with the same symbol.
    """
    if x_rle.block_count and y_rle.block_count and x_rle.first != y_rle.first:
        raise ValueError("x and y must start with the same symbol")
    x_ends = list(accumulate(x_rle.runs))
    y_ends = list(accumulate(y_rle.runs))

    def run_of(pos: int) -> int:
        for j, end in enumerate(y_ends, start=1):
            if pos <= end:
                return j
        raise ValueError(f"position {pos} beyond y")

    return tuple(run_of(mask[e - 1]) for e in x_ends)

"""Autocorrelation of patterns and asymptotic moments of the embedding count.

The autocorrelation coefficient counts the interleavings of two copies of x
that overlap in exactly one position; it drives the leading term of the
variance of the embedding count over a long random string and, empirically,
the entropy ordering of patterns of equal length.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .core import binomial, check_bits
from .entropy import SHANNON, entropy
from .superspace import build_posterior


@dataclass(frozen=True)
class KappaMatrices:
    """The indicator matrix B[r][s] = [x_r = x_s] and interleaving matrix M.

    M[r][s] counts interleavings of two copies of x whose r-th and s-th
    positions coincide; it does not depend on x.  The autocorrelation is the
    total of the entrywise product of B and M.
    """

    indicator: tuple[tuple[int, ...], ...]
    interleavings: tuple[tuple[int, ...], ...]

    def kappa_squared(self) -> int:
        return sum(
            b * v
            for brow, vrow in zip(self.indicator, self.interleavings)
            for b, v in zip(brow, vrow)
        )


def interleaving_matrix(m: int) -> tuple[tuple[int, ...], ...]:
    """M[r][s] = C(r+s-2, r-1) * C(2m-r-s, m-r), 1-based indices."""
    return tuple(
        tuple(
            binomial(r + s - 2, r - 1) * binomial(2 * m - r - s, m - r)
            for s in range(1, m + 1)
        )
        for r in range(1, m + 1)
    )


def kappa_matrices(x: str) -> KappaMatrices:
    check_bits(x)
    if not x:
        raise ValueError("x must be nonempty")
    m = len(x)
    indicator = tuple(
        tuple(int(x[r] == x[s]) for s in range(m)) for r in range(m)
    )
    return KappaMatrices(indicator=indicator, interleavings=interleaving_matrix(m))


def kappa_squared(x: str) -> int:
    """Autocorrelation coefficient of x."""
    check_bits(x)
    if not x:
        raise ValueError("x must be nonempty")
    m = len(x)
    total = 0
    for r in range(1, m + 1):
        xr = x[r - 1]
        for s in range(1, m + 1):
            if x[s - 1] == xr:
                total += binomial(r + s - 2, r - 1) * binomial(2 * m - r - s, m - r)
    return total


def kappa_max(m: int) -> int:
    """Maximal autocorrelation over length m: m * C(2m-1, m), by the constants."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return m * binomial(2 * m - 1, m)


def omega_mean_asymptotic(n: int, m: int) -> float:
    """Leading term of the mean embedding count: n^m / (2^m m!)."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n} m={m}")
    return n**m / (2**m * factorial(m))


def omega_variance_asymptotic(n: int, x: str) -> float:
    """Leading term of the embedding-count variance over random length-n strings.

    (2 kappa^2(x) - m C(2m-1, m)) * n^(2m-1) / (2^(2m) (2m-1)!).  The
    dominant covariance comes from pairs of embeddings sharing one position:
    an equal-symbol overlap contributes +1 and an opposite-symbol overlap -1,
    so the equal-overlap count kappa^2 enters through 2 kappa^2 minus the
    total overlap count.  The coefficient is a strictly increasing function
    of kappa^2, positive for every x (its minimum over length m is
    C(2m-2, m-1), at the alternating strings), and for constant x it reduces
    to kappa^2 itself.
    """
    check_bits(x)
    m = len(x)
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= |x| <= n, got |x|={m} n={n}")
    coefficient = 2 * kappa_squared(x) - kappa_max(m)
    return coefficient * n ** (2 * m - 1) / (2 ** (2 * m) * factorial(2 * m - 1))


def kappa_entropy_table(
    n: int, m: int, max_bits: int | None = None
) -> list[tuple[str, int, float]]:
    """(x, kappa^2(x), H_n(x)) for every x of length m, sorted by kappa^2.

    Descending autocorrelation, ties broken by x ascending; empirically the
    entropy column comes out nondecreasing.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got n={n} m={m}")
    rows = []
    for i in range(1 << m):
        x = format(i, f"0{m}b")
        h = entropy(build_posterior(x, n, max_bits=max_bits), SHANNON)
        rows.append((x, kappa_squared(x), h))
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows

"""Entropy measures over posteriors and the exact finite-deletion machinery.

All entropies are in bits.  Probabilities are the exact rationals
weight / mu, converted to double precision one term at a time and
accumulated with compensated summation, so results are reproducible to the
last bit regardless of evaluation order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import Rle, binomial, check_bits, g_chain, rle_decode, rle_encode
from .embeddings import count_embeddings_runs
from .superspace import (
    Posterior,
    build_posterior,
    total_masks,
    uncertainty_cardinality,
    weight_classes,
)

_LN2 = math.log(2)


@dataclass(frozen=True)
class Measure:
    """An entropy measure: Shannon, Renyi of order alpha, min- or Hartley."""

    kind: str
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("shannon", "renyi", "min", "hartley"):
            raise ValueError(f"unknown entropy measure {self.kind!r}")
        if self.kind == "renyi":
            if self.alpha is None or self.alpha <= 0 or self.alpha == 1:
                raise ValueError("renyi needs alpha > 0, alpha != 1")
        elif self.alpha is not None:
            raise ValueError(f"{self.kind} takes no alpha")

    def __str__(self) -> str:
        if self.kind == "renyi":
            return "renyi2" if self.alpha == 2 else f"renyi:{self.alpha:g}"
        return self.kind


SHANNON = Measure("shannon")
MIN_ENTROPY = Measure("min")
HARTLEY = Measure("hartley")


def renyi(alpha: float) -> Measure:
    return Measure("renyi", alpha)


def parse_measure(token: str) -> Measure:
    """Parse 'shannon', 'min', 'hartley', 'renyi2' or 'renyi:<alpha>'."""
    token = token.strip().lower()
    if token == "renyi2":
        return renyi(2.0)
    if token.startswith("renyi:"):
        return renyi(float(token.split(":", 1)[1]))
    return Measure(token)


def entropy_from_classes(
    classes, mu: int, measure: Measure = SHANNON
) -> float:
    """Entropy of the distribution {weight/mu} given a (weight, mult) histogram."""
    if measure.kind == "hartley":
        return math.log2(sum(mult for _, mult in classes))
    if measure.kind == "min":
        return -math.log2(max(w for w, _ in classes) / mu)
    if measure.kind == "shannon":
        return -math.fsum(
            mult * (w / mu) * math.log2(w / mu) for w, mult in classes
        )
    alpha = measure.alpha
    power_sum = math.fsum(mult * (w / mu) ** alpha for w, mult in classes)
    return math.log2(power_sum) / (1.0 - alpha)


def entropy(p: Posterior, measure: Measure = SHANNON) -> float:
    """Entropy of the posterior under the requested measure."""
    return entropy_from_classes(weight_classes(p).classes, p.mu, measure)


def min_shannon_closed(n: int, m: int) -> float:
    """Shannon entropy of the posterior of the constant string, in closed form.

    The minimum over all x of length m: grouping supersequences of 0^m by
    their number of ones j leaves weight C(n-j, m) with multiplicity C(n, j).
    """
    mu = total_masks(n, m)
    return -math.fsum(
        binomial(n, j)
        * (binomial(n - j, m) / mu)
        * math.log2(binomial(n - j, m) / mu)
        for j in range(n - m + 1)
    )


def min_renyi2_closed(n: int, m: int) -> float:
    """Second-order Renyi entropy of the constant string's posterior."""
    mu = total_masks(n, m)
    power_sum = math.fsum(
        binomial(n, j) * (binomial(n - j, m) / mu) ** 2 for j in range(n - m + 1)
    )
    return -math.log2(power_sum)


def min_minentropy_closed(n: int, m: int) -> int:
    """Min-entropy of the constant string's posterior: exactly n - m."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n} m={m}")
    return n - m


@dataclass(frozen=True)
class DeletionClasses:
    """Weight census of the supersequences one or two insertions away from x."""

    m: int
    deletions: int
    classes: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.m + self.deletions

    def string_count(self) -> int:
        return sum(mult for _, mult in self.classes)

    def mask_count(self) -> int:
        return sum(w * mult for w, mult in self.classes)

    def identities_hold(self) -> bool:
        """The census covers every supersequence and every mask exactly once."""
        return (
            self.string_count() == uncertainty_cardinality(self.n, self.m)
            and self.mask_count() == total_masks(self.n, self.m)
        )

    def entropy(self, measure: Measure = SHANNON) -> float:
        return entropy_from_classes(
            self.classes, total_masks(self.n, self.m), measure
        )


def single_deletion_classes(x_rle: Rle) -> DeletionClasses:
    """Weight census at n = m + 1.

    Lengthening run i gives one string of weight k_i + 1; every run split or
    end extension gives a singleton, and there are m - l + 2 of those.
    """
    if x_rle.block_count == 0:
        raise ValueError("x must be nonempty")
    k = x_rle.runs
    m = x_rle.length
    counts: dict[int, int] = {}
    for ki in k:
        counts[ki + 1] = counts.get(ki + 1, 0) + 1
    singles = m - len(k) + 2
    counts[1] = counts.get(1, 0) + singles
    return _checked(
        DeletionClasses(
            m=m, deletions=1, classes=tuple(sorted(counts.items(), reverse=True))
        )
    )


def double_deletion_classes(x_rle: Rle) -> DeletionClasses:
    """Weight census at n = m + 2, by constructing the supersequences.

    The per-case bookkeeping of the two-insertion analysis double-counts
    strings reachable through different insertion orders, so instead of
    trusting per-case multiplicities we materialize every insertion result,
    deduplicate, and weight each distinct string with the run-based counter.
    """
    if x_rle.block_count == 0:
        raise ValueError("x must be nonempty")
    x = rle_decode(x_rle)
    supers = {
        y2
        for y1 in _insertions(x)
        for y2 in _insertions(y1)
    }
    counts: dict[int, int] = {}
    for y in supers:
        w = count_embeddings_runs(x, y)
        counts[w] = counts.get(w, 0) + 1
    return _checked(
        DeletionClasses(
            m=len(x), deletions=2, classes=tuple(sorted(counts.items(), reverse=True))
        )
    )


def _insertions(s: str) -> set[str]:
    """All distinct strings obtained from s by one symbol insertion."""
    return {
        s[:i] + c + s[i:] for i in range(len(s) + 1) for c in "01"
    }


def _checked(census: DeletionClasses) -> DeletionClasses:
    # the string-count and weight-sum identities are non-negotiable: a census
    # that misses or double-counts anything must never leave this module
    if not census.identities_hold():
        raise AssertionError(
            f"inconsistent deletion census for m={census.m}, "
            f"d={census.deletions}: {census.classes}"
        )
    return census


def delta1(k1: int, k2: int) -> float:
    """Scaled Shannon-entropy drop of merging two leading runs, one deletion.

    e(k1+1) + e(k2+1) - e(k1+k2+1) with e(t) = -t log2 t; strictly positive,
    and equal to 2n (H_n(x) - H_n(g(x))) at m = n - 1.
    """
    if k1 < 1 or k2 < 1:
        raise ValueError("run lengths must be >= 1")
    return _e(k1 + 1) + _e(k2 + 1) - _e(k1 + k2 + 1)


def _e(t: int) -> float:
    return -t * math.log2(t)


def g_chain_entropies(
    x: str, n: int, measure: Measure = SHANNON, max_bits: int | None = None
) -> list[float]:
    """Entropies along x, g(x), g(g(x)), ... down to the single-run string."""
    check_bits(x)
    return [
        entropy(build_posterior(rle_decode(r), n, max_bits=max_bits), measure)
        for r in g_chain(rle_encode(x))
    ]


class MomentEstimate(NamedTuple):
    estimate: float
    bound: float


def entropy_estimate_from_moments(
    x: str, n: int, max_bits: int | None = None
) -> MomentEstimate:
    """Estimate H_n(x) from the first three moments of the weight distribution.

    With Omega the weight of a supersequence drawn uniformly from the
    uncertainty set, H = log2 mu - E(Omega log2 Omega) / E(Omega); the
    expectation is expanded to third order around E(Omega).  The returned
    bound dominates the Taylor remainder via the fourth central moment and
    is normalized like the estimate, so |estimate - H| <= bound always.
    """
    p = build_posterior(x, n, max_bits=max_bits)
    weights = p.weights()
    count = len(weights)
    mean = p.mu / count
    v = math.fsum((w - mean) ** 2 for w in weights) / count
    t3 = math.fsum((w - mean) ** 3 for w in weights) / count
    t4 = math.fsum((w - mean) ** 4 for w in weights) / count
    inner = mean * math.log(mean) + v / (2 * mean) - t3 / (6 * mean**2)
    estimate = math.log2(p.mu) - inner / (mean * _LN2)
    bound = 5 * t4 / (3 * mean**4 * _LN2)
    return MomentEstimate(estimate=estimate, bound=bound)


def posterior_shannon(x: str, n: int, max_bits: int | None = None) -> float:
    """Exact Shannon entropy H_n(x)."""
    return entropy(build_posterior(x, n, max_bits=max_bits), SHANNON)

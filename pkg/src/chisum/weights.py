"""Weight sequences of the chi summability method.

The method weights term k of a series by the running product

    w(k) = prod_{j=1..k} (1 - (j-1)/n),    w(0) = 1,

which decays factorially in k for fixed n and tends to 1 for fixed k as
n grows.  The equivalent averaging (matrix) form uses the normalized row
a(k) = k*w(k)/n, which is a probability row vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import DomainError

__all__ = [
    "WeightVector",
    "AveragingRow",
    "ToeplitzDiagnostics",
    "chi_weight",
    "chi_row",
    "averaging_row",
    "verify_toeplitz",
    "exp_approx_gap",
]


@dataclass(frozen=True)
class WeightVector:
    """Row of chi weights for a fixed order n; w[k] weights term k."""

    n: int
    w: tuple[float, ...]


@dataclass(frozen=True)
class AveragingRow:
    """Normalized matrix row a[k] = k*w[k]/n of the averaging form."""

    n: int
    a: tuple[float, ...]


@dataclass(frozen=True)
class ToeplitzDiagnostics:
    """Row diagnostics backing the three regularity conditions."""

    abs_row_sum: float
    row_sum: float
    max_entry: float
    nonnegative: bool


def chi_weight(n: int, k: int) -> float:
    """Weight of term k at order n, by the multiplicative recurrence.

    Exact for k in {0, 1}.  Raises DomainError unless 0 <= k <= n.
    """
    if n < 1:
        raise DomainError(f"order n must be positive, got {n}")
    if k < 0 or k > n:
        raise DomainError(f"index k={k} outside 0..{n}")
    w = 1.0
    for j in range(1, k + 1):
        w *= 1.0 - (j - 1) / n
    return w


# Rows are cached because sweeps revisit the same orders; the cache is
# read-mostly and lru_cache is safe for concurrent readers.
@lru_cache(maxsize=64)
def chi_row(n: int) -> WeightVector:
    """Full weight row w[0..n] at order n.

    Weights are built by the running product, never via factorials, so
    there is no overflow for n > 170; entries near k = n may underflow
    to zero harmlessly at large n.
    """
    if n < 1:
        raise DomainError(f"order n must be positive, got {n}")
    w = [0.0] * (n + 1)
    w[0] = 1.0
    for k in range(1, n + 1):
        w[k] = w[k - 1] * (1.0 - (k - 1) / n)
    return WeightVector(n=n, w=tuple(w))


def averaging_row(n: int) -> AveragingRow:
    """Averaging-form row a[k] = k*w[k]/n; entries sum to 1."""
    row = chi_row(n)
    a = tuple(k * wk / n for k, wk in enumerate(row.w))
    return AveragingRow(n=n, a=a)


def verify_toeplitz(row: AveragingRow) -> ToeplitzDiagnostics:
    """Diagnostics for the regular-matrix row conditions.

    For this method the entries are nonnegative, so the absolute row sum
    equals the row sum.
    """
    abs_row_sum = math.fsum(abs(x) for x in row.a)
    row_sum = math.fsum(row.a)
    return ToeplitzDiagnostics(
        abs_row_sum=abs_row_sum,
        row_sum=row_sum,
        max_entry=max(row.a),
        nonnegative=all(x >= 0.0 for x in row.a),
    )


def exp_approx_gap(n: int, samples: int) -> float:
    """Max of |(1 - x/n)^n - exp(-x)| over a uniform grid on [0, n].

    The analytic bound is 1/(e*n); callers assert the returned gap stays
    below it.
    """
    if n < 1:
        raise DomainError(f"order n must be positive, got {n}")
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    gap = 0.0
    for i in range(samples):
        x = n * i / (samples - 1)
        g = abs((1.0 - x / n) ** n - math.exp(-x))
        if g > gap:
            gap = g
    return gap

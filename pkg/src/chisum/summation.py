"""The chi summation engine: both definitional forms, grid sweeps with
convergence classification, Richardson acceleration, and the classical
comparison methods (Cesaro, Euler transform, Abel).

The weighted sums are badly conditioned near the summability boundary:
the terms grow like exp(c*n) before cancelling down to order one, which
destroys double precision long before the method itself fails.  The
sweep engine therefore estimates the cancellation (sum of absolute
weighted terms over the result) and re-evaluates in extended precision
when the series can supply extended-precision terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import mpmath

from .error_model import ErrorEstimate, observed_error, predicted_error
from .exceptions import AbelRadiusError, DomainError, NumericError
from .series import SeriesSpec, partial_sums
from .weights import averaging_row, chi_row

__all__ = [
    "CONVERGED",
    "DIVERGING",
    "INCONCLUSIVE",
    "ChiResult",
    "chi_sum",
    "chi_limit",
    "chi_sweep",
    "classify_convergence",
    "richardson_accelerate",
    "cesaro_mean",
    "euler_transform",
    "abel_estimate",
]

CONVERGED = "converged"
DIVERGING = "diverging"
INCONCLUSIVE = "inconclusive"

# Cancellation ratio above which a double-precision weighted sum has lost
# roughly half its digits and is re-evaluated in extended precision.
_COND_LIMIT = 1e8


@dataclass(frozen=True)
class ChiResult:
    """Approximant history over an n-grid with a convergence verdict."""

    n_grid: tuple[int, ...]
    approximants: tuple[float, ...]
    value: float
    verdict: str
    error: Optional[ErrorEstimate] = None
    accelerated: bool = False


def _weighted_sum(spec: SeriesSpec, n: int) -> tuple[float, float]:
    """Double-precision weighted sum and its absolute-term sum."""
    w = chi_row(n).w
    terms = []
    for k in range(n + 1):
        try:
            t = w[k] * spec.term(k)
        except OverflowError as exc:
            raise NumericError(
                f"non-finite weighted term at index {k}"
            ) from exc
        if not math.isfinite(t):
            raise NumericError(f"non-finite weighted term at index {k}")
        terms.append(t)
    return math.fsum(terms), math.fsum(abs(t) for t in terms)


def _weighted_sum_mp(spec: SeriesSpec, n: int, dps: int) -> float:
    """Extended-precision weighted sum via the series' mp_term."""
    with mpmath.workdps(dps):
        w = mpmath.mpf(1)
        acc = spec.mp_term(0)
        for k in range(1, n + 1):
            w *= 1 - mpmath.mpf(k - 1) / n
            acc += w * spec.mp_term(k)
        return float(acc)


def _evaluate(spec: SeriesSpec, n: int) -> float:
    """chi approximant at order n, escalating precision when double
    arithmetic cancels catastrophically."""
    try:
        value, abs_sum = _weighted_sum(spec, n)
    except NumericError:
        if spec.mp_term is None:
            raise
        return _weighted_sum_mp(spec, n, dps=max(50, n))
    if abs_sum == 0.0 or spec.mp_term is None:
        return value
    cond = abs_sum / max(abs(value), 1e-300)
    if not math.isfinite(cond) or cond > _COND_LIMIT:
        # Size the working precision from the absolute-term sum so it does
        # not depend on the (already corrupted) double-precision value.
        if math.isfinite(abs_sum):
            dps = 25 + max(0, int(math.log10(abs_sum)))
        else:
            dps = max(50, n)
        return _weighted_sum_mp(spec, n, dps=dps)
    return value


def chi_sum(spec: SeriesSpec, n: int) -> float:
    """Weighted term sum sum_{k=0..n} w(k) * a_k (first defining form),
    in double precision with compensated summation."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return _weighted_sum(spec, n)[0]


def chi_limit(spec: SeriesSpec, n: int) -> float:
    """Weighted average of the partial sums under the averaging row
    (second defining form); algebraically equal to chi_sum."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    a = averaging_row(n).a
    s = partial_sums(spec, n).s
    num = math.fsum(a[k] * s[k] for k in range(n + 1))
    den = math.fsum(a)
    return num / den


def classify_convergence(
    approximants: Sequence[float],
    n_grid: Sequence[int],
    abs_tol: float = 1e-6,
    rel_tol: float = 1e-4,
) -> str:
    """Verdict from the successive differences of a grid of approximants.

    Converged when the last difference is inside tolerance, or when the
    trailing differences are strictly shrinking.  Diverging when the
    trailing differences are nondecreasing and have at least doubled
    over the last three of them.  Inconclusive otherwise.
    """
    if len(approximants) < 3 or len(approximants) != len(n_grid):
        raise DomainError("need at least 3 grid points with approximants")
    d = [
        abs(approximants[i + 1] - approximants[i])
        for i in range(len(approximants) - 1)
    ]
    value = approximants[-1]
    if d[-1] <= max(abs_tol, rel_tol * abs(value)):
        return CONVERGED
    tail = d[-3:]
    if len(tail) == 3:
        if tail[0] <= tail[1] <= tail[2] and tail[2] >= 2.0 * tail[0]:
            return DIVERGING
        if tail[0] > tail[1] > tail[2]:
            return CONVERGED
    else:  # exactly 3 grid points: two differences
        if tail[1] >= 2.0 * tail[0]:
            return DIVERGING
        if tail[1] < tail[0]:
            return CONVERGED
    return INCONCLUSIVE


def richardson_accelerate(v1: float, n1: int, v2: float, n2: int) -> float:
    """Eliminate a C/n error term from two approximants."""
    if n2 <= n1:
        raise DomainError(f"need n2 > n1, got n1={n1}, n2={n2}")
    if n1 < 1:
        raise DomainError(f"need n1 >= 1, got {n1}")
    return (n2 * v2 - n1 * v1) / (n2 - n1)


def chi_sweep(
    spec: SeriesSpec, n_grid: Sequence[int], accelerate: bool = False
) -> ChiResult:
    """Approximants over an increasing n-grid, classified.

    With accelerate=True the reported value is the Richardson
    extrapolation of the last two approximants, but only when two
    consecutive extrapolations agree to within the last raw difference;
    an oscillatory boundary term otherwise corrupts the extrapolation
    and the last raw approximant is kept.
    """
    grid = tuple(int(n) for n in n_grid)
    if not grid:
        raise DomainError("empty n-grid")
    if any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 1:
        raise DomainError("n-grid must be strictly increasing positive integers")
    approx = tuple(_evaluate(spec, n) for n in grid)
    verdict = classify_convergence(approx, grid) if len(grid) >= 3 else INCONCLUSIVE
    value = approx[-1]
    accelerated = False
    if accelerate and len(grid) >= 2:
        r_last = richardson_accelerate(approx[-2], grid[-2], approx[-1], grid[-1])
        if len(grid) >= 3:
            r_prev = richardson_accelerate(
                approx[-3], grid[-3], approx[-2], grid[-2]
            )
            if abs(r_last - r_prev) <= abs(approx[-1] - approx[-2]):
                value = r_last
                accelerated = True
        else:
            value = r_last
            accelerated = True

    error = None
    if spec.second_derivative is not None and spec.x is not None:
        predicted = predicted_error(
            spec.second_derivative, spec.x, spec.x0, grid[-1]
        )
        observed = ratio = None
        if spec.exact_value is not None:
            observed = observed_error(approx[-1], spec.exact_value)
            if predicted != 0.0:
                ratio = observed / predicted
        error = ErrorEstimate(predicted=predicted, observed=observed, ratio=ratio)

    return ChiResult(
        n_grid=grid,
        approximants=approx,
        value=value,
        verdict=verdict,
        error=error,
        accelerated=accelerated,
    )


def cesaro_mean(spec: SeriesSpec, n: int) -> float:
    """Arithmetic mean of the partial sums s_0..s_n ((C,1) mean)."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    s = partial_sums(spec, n).s
    return math.fsum(s) / (n + 1)


def euler_transform(spec: SeriesSpec, n: int) -> float:
    """Euler transform of an alternating series a_k = (-1)^k b_k.

    Evaluates sum_{j=0..n} (-1)^j (D^j b)(0) / 2^(j+1) with D the
    forward difference of b_k = (-1)^k a_k.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    b = [(-1.0 if k & 1 else 1.0) * spec.term(k) for k in range(n + 1)]
    total = 0.0
    scale = 0.5
    sign = 1.0
    for j in range(n + 1):
        total += sign * scale * b[0]
        scale *= 0.5
        sign = -sign
        b = [b[i + 1] - b[i] for i in range(len(b) - 1)]
    return total


def abel_estimate(
    spec: SeriesSpec, radii: Sequence[float], extrapolate: bool = False
) -> float:
    """Abel-style evaluation: A(r) = sum a_k r^k at each radius, by
    truncation once the terms fall below the machine tail.

    Returns A at the last radius, or the linear extrapolation of the
    last two values in (1 - r) -> 0 when extrapolate is set.  Raises
    AbelRadiusError when the inner series never reaches its tail
    threshold within 10^6 terms.
    """
    rs = tuple(float(r) for r in radii)
    if not rs or any(not (0.0 < r < 1.0) for r in rs):
        raise DomainError("radii must be in (0, 1)")
    if any(b <= a for a, b in zip(rs, rs[1:])):
        raise DomainError("radii must be increasing")

    values = []
    for r in rs:
        acc = 0.0
        comp = 0.0
        rk = 1.0
        below = 0
        for k in range(10**6):
            try:
                t = spec.term(k) * rk
            except OverflowError as exc:
                raise AbelRadiusError(
                    f"inner series overflowed at radius {r} (term {k})"
                ) from exc
            if not math.isfinite(t):
                raise AbelRadiusError(
                    f"inner series overflowed at radius {r} (term {k})"
                )
            y = t - comp
            s = acc + y
            comp = (s - acc) - y
            acc = s
            rk *= r
            if abs(t) <= 1e-16 * abs(acc):
                below += 1
                if below >= 2:
                    break
            else:
                below = 0
        else:
            raise AbelRadiusError(
                f"inner series did not reach its tail threshold at radius {r}"
            )
        values.append(acc)

    if not extrapolate or len(values) == 1:
        return values[-1]
    t1, t2 = 1.0 - rs[-2], 1.0 - rs[-1]
    a1, a2 = values[-2], values[-1]
    return (a2 * t1 - a1 * t2) / (t1 - t2)

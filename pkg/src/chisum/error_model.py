"""Asymptotic error predictor and empirical rate diagnostics.

For a power series of an analytic f evaluated at x from base point x0,
the leading error of the order-n approximant is

    f(x) - f_hat_n(x)  ~  f''(x) * (x - x0)^2 / (2n),

so the method approaches from below where f is convex and from above
where f is concave.  Everything here uses the f(x) - f_hat_n(x) sign
convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import DomainError

__all__ = ["ErrorEstimate", "RateFit", "predicted_error", "observed_error", "rate_fit"]


@dataclass(frozen=True)
class ErrorEstimate:
    """Predicted leading error, optionally paired with the observed one.

    ratio is observed/predicted and is present exactly when observed is
    present and predicted is nonzero.
    """

    predicted: float
    observed: Optional[float] = None
    ratio: Optional[float] = None

    def __post_init__(self):
        should_have_ratio = self.observed is not None and self.predicted != 0.0
        if should_have_ratio != (self.ratio is not None):
            raise DomainError(
                "ratio must be present exactly when observed is present "
                "and predicted is nonzero"
            )


@dataclass(frozen=True)
class RateFit:
    """Power-law fit |error| ~ C / n^p."""

    C: float
    p: float


def predicted_error(f2_at_x: float, x: float, x0: float, n: int) -> float:
    """Leading asymptotic error f''(x) * (x - x0)^2 / (2n)."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return f2_at_x * (x - x0) ** 2 / (2.0 * n)


def observed_error(approximant: float, exact: float) -> float:
    """Observed error exact - approximant (the f - f_hat convention)."""
    return exact - approximant


def rate_fit(n_grid: Sequence[int], errors: Sequence[float]) -> RateFit:
    """Least-squares fit of log|e| = log C - p*log n.

    All errors must be nonzero and share a sign; a sign change means the
    log-linear model does not apply.
    """
    if len(n_grid) != len(errors) or len(errors) < 3:
        raise DomainError("need at least 3 (n, error) pairs")
    if any(e == 0.0 for e in errors):
        raise DomainError("errors must be nonzero")
    if any(e * errors[0] < 0.0 for e in errors):
        raise DomainError("errors change sign; power-law fit invalid")
    logn = np.log(np.asarray(n_grid, dtype=float))
    loge = np.log(np.abs(np.asarray(errors, dtype=float)))
    slope, intercept = np.polyfit(logn, loge, 1)
    return RateFit(C=float(np.exp(intercept)), p=float(-slope))

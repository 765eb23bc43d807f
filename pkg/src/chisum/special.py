"""Special-function kernel: Bernoulli numbers, harmonic numbers, trigamma,
the Euler-Maclaurin generating function h, the Euler-Mascheroni constant,
and the summability-boundary constant kappa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exceptions import DomainError, NumericError

__all__ = [
    "BernoulliTable",
    "EULER_GAMMA",
    "bernoulli_numbers",
    "harmonic",
    "trigamma",
    "bernoulli_gen_fn",
    "solve_kappa",
    "euler_gamma",
]

#: Euler-Mascheroni constant, rounded to double precision.
EULER_GAMMA = 0.5772156649015329

# Beyond index 60 the Bernoulli numbers grow past what double precision
# can represent with useful relative accuracy.
_BERNOULLI_MAX = 60


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0..B_m under the B_1 = +1/2 convention."""

    values: tuple[float, ...]

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=1)
def _bernoulli_fractions(m: int) -> tuple[Fraction, ...]:
    # Exact rational recurrence: sum_{j=0..m} C(m+1, j) B_j = m + 1
    # under the B_1 = +1/2 convention.
    b: list[Fraction] = [Fraction(1)]
    for i in range(1, m + 1):
        s = sum(math.comb(i + 1, j) * b[j] for j in range(i))
        b.append(Fraction(i + 1 - s, i + 1))
    return tuple(b)


def bernoulli_numbers(m: int) -> BernoulliTable:
    """Bernoulli numbers B_0..B_m (B_1 = +1/2), exact rationals rounded
    to double precision.

    Raises DomainError for m > 60: past that point the magnitude growth
    of B_m exceeds double precision's useful accuracy.
    """
    if m < 0:
        raise DomainError(f"need m >= 0, got {m}")
    if m > _BERNOULLI_MAX:
        raise DomainError(
            f"m={m} exceeds the double-precision validity window "
            f"(m <= {_BERNOULLI_MAX})"
        )
    fracs = _bernoulli_fractions(_BERNOULLI_MAX)[: m + 1]
    return BernoulliTable(values=tuple(float(f) for f in fracs))


def harmonic(k: int) -> float:
    """Harmonic number H_k = sum_{j=1..k} 1/j, compensated."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    return math.fsum(1.0 / j for j in range(1, k + 1))


# Even-index Bernoulli numbers B_2..B_10 for the trigamma tail; these are
# convention-independent.
_TRIGAMMA_TAIL = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0)
_TRIGAMMA_SWITCH = 10.0


def trigamma(z: float) -> float:
    """Trigamma function (second derivative of log-gamma) for z > 0.

    Upward recurrence until z >= 10, then the asymptotic tail with five
    even-index Bernoulli terms; relative error is at the 1e-13 level.
    """
    if not z > 0.0:
        raise DomainError(f"trigamma needs z > 0, got {z}")
    acc = 0.0
    while z < _TRIGAMMA_SWITCH:
        acc += 1.0 / (z * z)
        z += 1.0
    s = 1.0 / z + 1.0 / (2.0 * z * z)
    z2 = z * z
    p = z * z2
    for b in _TRIGAMMA_TAIL:
        s += b / p
        p *= z2
    return acc + s


def bernoulli_gen_fn(x: float) -> float:
    """Generating function h(x) that the Bernoulli power series tracks
    asymptotically: (1/x) * trigamma(1 + 1/x) + x for x > 0.

    h(0) = 1 by continuity.  For x < 0 the direct formula hits the
    trigamma pole, so the single-odd-term parity identity
    h(x) = h(-x) + x is used instead.
    """
    if x == 0.0:
        return 1.0
    if x < 0.0:
        return bernoulli_gen_fn(-x) + x
    return (1.0 / x) * trigamma(1.0 + 1.0 / x) + x


def solve_kappa(tol: float) -> float:
    """Boundary constant kappa solving k*log(k) - k = 1, by Newton.

    The geometric series is summable by this method exactly for
    arguments in (-kappa, 1); kappa is about 3.5911.
    """
    if not tol >= 1e-15:
        raise DomainError(f"tolerance must be >= 1e-15, got {tol}")
    k = 3.5
    for _ in range(100):
        g = k * math.log(k) - k - 1.0
        if abs(g) <= tol:
            return k
        k -= g / math.log(k)
    raise NumericError("kappa Newton iteration failed to converge")


def euler_gamma() -> float:
    """Euler-Mascheroni constant as a double-precision literal."""
    return EULER_GAMMA

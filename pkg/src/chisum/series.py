"""Series catalog: the term streams exercised throughout the package,
plus user-supplied coefficient series.

A SeriesSpec bundles the term function a_k with whatever reference data
is known for it: an exact value (limit or antilimit), the second
derivative of the generating function at the evaluation point (for the
asymptotic error predictor), and an optional extended-precision term
evaluator used by the sweep engine when double precision cancels out.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import mpmath

from .exceptions import DomainError, SeriesFormatError, UnknownSeriesError
from .special import bernoulli_numbers, harmonic

__all__ = [
    "SeriesSpec",
    "PartialSums",
    "CATALOG_NAMES",
    "catalog_lookup",
    "load_custom",
    "partial_sums",
    "combine",
]

CATALOG_NAMES = (
    "geometric",
    "grandi",
    "alt_harmonic_numbers",
    "alt_log",
    "alternating_unit",
    "log1p_taylor",
    "bernoulli_power",
    "custom",
)


@dataclass(frozen=True)
class SeriesSpec:
    """A term stream with optional reference data.

    term(k) must be total for all k >= 0 within the series' declared
    domain.  exact_value, when present, is the sanctioned assignment
    (ordinary limit or antilimit).  second_derivative is f''(x) of the
    generating function, used by the error predictor.
    """

    name: str
    term: Callable[[int], float]
    exact_value: Optional[float] = None
    second_derivative: Optional[float] = None
    x: Optional[float] = None
    x0: float = 0.0
    mp_term: Optional[Callable[[int], "mpmath.mpf"]] = field(
        default=None, repr=False
    )
    asymptotic_only: bool = False


@dataclass(frozen=True)
class PartialSums:
    """Prefix sums s[k] = a_0 + ... + a_k."""

    s: tuple[float, ...]


def _geometric(x: float) -> SeriesSpec:
    xm = mpmath.mpf(x)
    return SeriesSpec(
        name="geometric",
        term=lambda k: x**k,
        exact_value=1.0 / (1.0 - x) if x < 1.0 else None,
        second_derivative=2.0 / (1.0 - x) ** 3 if x != 1.0 else None,
        x=x,
        mp_term=lambda k: xm**k,
    )


def _grandi(name: str = "grandi") -> SeriesSpec:
    # The Grandi series is geometric at x = -1.
    return SeriesSpec(
        name=name,
        term=lambda k: -1.0 if k & 1 else 1.0,
        exact_value=0.5,
        second_derivative=0.25,
        x=-1.0,
        mp_term=lambda k: mpmath.mpf(-1 if k & 1 else 1),
    )


def _alt_harmonic_numbers() -> SeriesSpec:
    return SeriesSpec(
        name="alt_harmonic_numbers",
        term=lambda k: (-1.0 if k & 1 else 1.0) * harmonic(k + 1),
        exact_value=math.log(2.0) / 2.0,
    )


def _alt_log() -> SeriesSpec:
    return SeriesSpec(
        name="alt_log",
        term=lambda k: (-1.0 if k & 1 else 1.0) * math.log(1.0 + k),
        exact_value=0.5 * math.log(2.0 / math.pi),
    )


def _log1p_taylor(x: float) -> SeriesSpec:
    def term(k: int) -> float:
        if k == 0:
            return 0.0
        return (-(x**k) if k & 1 == 0 else x**k) / k

    xm = mpmath.mpf(x)

    def mp_term(k: int) -> "mpmath.mpf":
        if k == 0:
            return mpmath.mpf(0)
        t = xm**k / k
        return -t if k & 1 == 0 else t

    return SeriesSpec(
        name="log1p_taylor",
        term=term,
        exact_value=math.log1p(x) if x > -1.0 else None,
        second_derivative=-1.0 / (1.0 + x) ** 2 if x != -1.0 else None,
        x=x,
        mp_term=mp_term,
    )


def _bernoulli_power(x: float) -> SeriesSpec:
    from .special import bernoulli_gen_fn

    table = bernoulli_numbers(60)

    def term(k: int) -> float:
        if k >= len(table):
            raise DomainError(
                f"bernoulli_power terms available up to k={len(table) - 1}"
            )
        return table[k] * x**k

    return SeriesSpec(
        name="bernoulli_power",
        term=term,
        exact_value=bernoulli_gen_fn(x),
        x=x,
        asymptotic_only=True,
    )


def _custom(
    coefficients: Sequence[float],
    x: Optional[float] = None,
    exact: Optional[float] = None,
) -> SeriesSpec:
    coeffs = tuple(float(c) for c in coefficients)
    xv = 1.0 if x is None else float(x)

    def term(k: int) -> float:
        if k >= len(coeffs):
            return 0.0
        return coeffs[k] * xv**k

    return SeriesSpec(
        name="custom",
        term=term,
        exact_value=None if exact is None else float(exact),
        x=None if x is None else xv,
    )


def catalog_lookup(name: str, **params) -> SeriesSpec:
    """Look up a catalog series by name.

    Parameterized entries take ``x``; ``custom`` takes ``coefficients``
    plus optional ``x`` and ``exact``.  Unknown names raise
    UnknownSeriesError.  An evaluation point outside a series' validity
    simply leaves exact_value unset; it is not an error.
    """
    if name == "geometric":
        return _geometric(float(params["x"]))
    if name == "grandi":
        return _grandi()
    if name == "alternating_unit":
        # Same term stream as the Grandi series, kept as its own name.
        return _grandi(name="alternating_unit")
    if name == "alt_harmonic_numbers":
        return _alt_harmonic_numbers()
    if name == "alt_log":
        return _alt_log()
    if name == "log1p_taylor":
        return _log1p_taylor(float(params["x"]))
    if name == "bernoulli_power":
        return _bernoulli_power(float(params["x"]))
    if name == "custom":
        return _custom(
            params["coefficients"],
            x=params.get("x"),
            exact=params.get("exact"),
        )
    raise UnknownSeriesError(f"unknown series {name!r}; known: {CATALOG_NAMES}")


def load_custom(source) -> SeriesSpec:
    """Build a custom series from a JSON document.

    Accepts a path, a JSON string, or an already-parsed dict with keys
    {"coefficients": [...], "x": number?, "exact": number?}.
    """
    if isinstance(source, dict):
        doc = source
    else:
        text = None
        if isinstance(source, Path) or (
            isinstance(source, str) and not source.lstrip().startswith("{")
        ):
            try:
                text = Path(source).read_text()
            except OSError as exc:
                raise SeriesFormatError(f"cannot read {source}: {exc}") from exc
        else:
            text = source
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SeriesFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "coefficients" not in doc:
        raise SeriesFormatError('custom series needs a "coefficients" list')
    coeffs = doc["coefficients"]
    if not isinstance(coeffs, list) or not all(
        isinstance(c, (int, float)) for c in coeffs
    ):
        raise SeriesFormatError('"coefficients" must be a list of numbers')
    return _custom(coeffs, x=doc.get("x"), exact=doc.get("exact"))


def partial_sums(spec: SeriesSpec, n: int) -> PartialSums:
    """Prefix sums s[0..n] with compensated accumulation."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    out = []
    acc = 0.0
    comp = 0.0
    for k in range(n + 1):
        y = spec.term(k) - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        out.append(acc)
    return PartialSums(s=tuple(out))


def combine(specs: Sequence[SeriesSpec], coefficients: Sequence[float]) -> SeriesSpec:
    """Termwise linear combination of series.

    The exact value is the same combination when every input carries
    one; otherwise it is left unset.
    """
    if len(specs) != len(coefficients):
        raise DomainError(
            f"{len(specs)} series but {len(coefficients)} coefficients"
        )
    if not specs:
        raise DomainError("need at least one series")
    pairs = tuple(zip(coefficients, specs))

    def term(k: int) -> float:
        return math.fsum(c * s.term(k) for c, s in pairs)

    exact = None
    if all(s.exact_value is not None for s in specs):
        exact = math.fsum(c * s.exact_value for c, s in pairs)

    mp_term = None
    if all(s.mp_term is not None for s in specs):
        def mp_term(k: int) -> "mpmath.mpf":
            return mpmath.fsum(mpmath.mpf(c) * s.mp_term(k) for c, s in pairs)

    return SeriesSpec(
        name="combined(" + ",".join(s.name for s in specs) + ")",
        term=term,
        exact_value=exact,
        mp_term=mp_term,
        asymptotic_only=any(s.asymptotic_only for s in specs),
    )

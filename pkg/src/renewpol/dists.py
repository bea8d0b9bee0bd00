"""Normal/lognormal probability kernel shared by all decision policies.

Scalar operations validate their inputs and are meant for single
decisions and tests; the array helpers at the bottom are the vectorized
forms the evaluation engine runs on millions of prediction steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import ndtr, ndtri

__all__ = [
    "LognormalParams",
    "TruncatedMoment",
    "normal_cdf",
    "normal_quantile",
    "lognormal_cdf",
    "lognormal_quantile",
    "truncated_lognormal",
    "interval_prob",
    "partial_expectation",
]

# Below this z-score the closed-form partial expectation loses all its
# leading digits to cancellation; switch to quadrature.
_TAIL_Z = -8.0


def normal_cdf(x: float) -> float:
    """Standard normal CDF, accurate to well below 1e-12 absolute."""
    if not math.isfinite(x):
        raise ValueError(f"normal_cdf requires finite input, got {x!r}")
    return float(ndtr(x))


def normal_quantile(p: float) -> float:
    """Inverse standard normal CDF for p in (0, 1)."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"normal_quantile requires p in (0, 1), got {p!r}")
    return float(ndtri(p))


@dataclass(frozen=True)
class LognormalParams:
    """A lognormal RUL density: location and spread on the log scale."""

    mu_ln: float
    sigma_ln: float

    def __post_init__(self):
        if not math.isfinite(self.mu_ln):
            raise ValueError(f"mu_ln must be finite, got {self.mu_ln!r}")
        if not (math.isfinite(self.sigma_ln) and self.sigma_ln > 0.0):
            raise ValueError(f"sigma_ln must be positive, got {self.sigma_ln!r}")

    @property
    def median(self) -> float:
        return math.exp(self.mu_ln)

    @property
    def mean(self) -> float:
        return math.exp(self.mu_ln + 0.5 * self.sigma_ln**2)


def lognormal_cdf(params: LognormalParams, t: float) -> float:
    """P(X <= t) for X ~ lognormal(params). Zero at the support edge t=0."""
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"lognormal_cdf requires t >= 0, got {t!r}")
    if t == 0.0:
        return 0.0
    return float(ndtr((math.log(t) - params.mu_ln) / params.sigma_ln))


def lognormal_quantile(params: LognormalParams, q: float) -> float:
    """Inverse of lognormal_cdf for q in (0, 1)."""
    if not 0.0 < q < 1.0:
        raise ValueError(f"lognormal_quantile requires q in (0, 1), got {q!r}")
    return math.exp(params.mu_ln + params.sigma_ln * float(ndtri(q)))


@dataclass(frozen=True)
class TruncatedMoment:
    """Probability mass on an interval (a, b] and the conditional mean there.

    ``cond_mean`` is None exactly when the interval carries no mass.
    """

    prob: float
    cond_mean: float | None

    @property
    def is_empty(self) -> bool:
        return self.cond_mean is None

    def partial_expectation(self) -> float:
        """Unnormalized first moment prob * cond_mean (0 for empty intervals)."""
        return 0.0 if self.is_empty else self.prob * self.cond_mean


def _z_lower(params: LognormalParams, a: float) -> float:
    return -math.inf if a == 0.0 else (math.log(a) - params.mu_ln) / params.sigma_ln


def _z_upper(params: LognormalParams, b: float) -> float:
    return math.inf if math.isinf(b) else (math.log(b) - params.mu_ln) / params.sigma_ln


def _tail_cond_mean(mu: float, sigma: float, za: float, zb: float) -> float:
    """Conditional mean on a deep-left-tail slice via scaled quadrature.

    Integrates downward from the upper z-bound with the common factor
    exp(-zb^2/2) removed, so integrands stay O(1) where the raw density
    underflows.
    """
    upper = zb - za  # may be inf when a == 0

    def weight(u):
        return math.exp(zb * u - 0.5 * u * u)

    den, _ = quad(weight, 0.0, upper, epsabs=0.0, epsrel=1e-12, limit=200)
    num, _ = quad(
        lambda u: math.exp(-sigma * u) * weight(u),
        0.0,
        upper,
        epsabs=0.0,
        epsrel=1e-12,
        limit=200,
    )
    return math.exp(mu + sigma * zb) * num / den


def truncated_lognormal(params: LognormalParams, a: float, b: float) -> TruncatedMoment:
    """Mass and conditional mean of a lognormal restricted to (a, b].

    ``b`` may be ``math.inf``; infinite bounds are branched on explicitly,
    so no logarithm of an infinite bound is ever taken.
    """
    if not (math.isfinite(a) and a >= 0.0):
        raise ValueError(f"lower bound must be finite and >= 0, got {a!r}")
    if a > b or math.isnan(b):
        raise ValueError(f"bounds must satisfy a <= b, got a={a!r}, b={b!r}")
    if a == b:
        return TruncatedMoment(prob=0.0, cond_mean=None)

    za = _z_lower(params, a)
    zb = _z_upper(params, b)
    prob = float(ndtr(zb) - ndtr(za))
    if prob <= 0.0:
        return TruncatedMoment(prob=max(prob, 0.0), cond_mean=None)

    sigma = params.sigma_ln
    if max(za, zb) - sigma < _TAIL_Z and math.isfinite(b):
        cond_mean = _tail_cond_mean(params.mu_ln, sigma, za, zb)
    else:
        scale = math.exp(params.mu_ln + 0.5 * sigma * sigma)
        cond_mean = scale * float(ndtr(zb - sigma) - ndtr(za - sigma)) / prob
    # The conditional mean of a value supported on (a, b] lies in (a, b];
    # clip away the last-ulp excursions of the closed form.
    if math.isfinite(b):
        cond_mean = min(cond_mean, b)
    cond_mean = max(cond_mean, math.nextafter(a, math.inf))
    return TruncatedMoment(prob=prob, cond_mean=cond_mean)


# ---------------------------------------------------------------------------
# Vectorized forms. mu/sigma are arrays over prediction steps, the interval
# (a, b] is shared; b may be math.inf. Returns float64 arrays.
# ---------------------------------------------------------------------------


def _z_arr(mu, sigma, t):
    if t == 0.0:
        return np.full(np.shape(mu), -np.inf)
    if math.isinf(t):
        return np.full(np.shape(mu), np.inf)
    return (math.log(t) - np.asarray(mu)) / np.asarray(sigma)


def interval_prob(mu, sigma, a: float, b: float) -> np.ndarray:
    """P(a < X <= b) for lognormal(mu[i], sigma[i])."""
    return ndtr(_z_arr(mu, sigma, b)) - ndtr(_z_arr(mu, sigma, a))


def partial_expectation(mu, sigma, a: float, b: float) -> np.ndarray:
    """Unnormalized moment E[X * 1{a < X <= b}] for lognormal(mu[i], sigma[i])."""
    mu = np.asarray(mu, dtype=np.float64)
    sigma = np.asarray(sigma, dtype=np.float64)
    scale = np.exp(mu + 0.5 * sigma * sigma)
    return scale * (ndtr(_z_arr(mu, sigma, b) - sigma) - ndtr(_z_arr(mu, sigma, a) - sigma))

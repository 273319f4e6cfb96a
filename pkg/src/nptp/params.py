"""Choosing the map parameter ``p``, plus node-spacing and derivative diagnostics."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .approx import (
    DEFAULT_INTERVAL,
    _check_interval,
    as_target,
    basis_derivative,
    evaluate,
    interpolate,
    nptp_nodes,
)
from .exceptions import BadEvaluationError, OptimizationFailure, ParameterError
from .mapping import HALF_PI, SineMap
from .polynomial import cheb_lobatto_nodes

SCAN_POINTS = 64
SCAN_MARGIN = 1e-9
GOLDEN_ITERATIONS = 60
DEFAULT_SEED = 42
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class PSelection:
    p: float
    strategy: str  # "fixed" or "adaptive"
    eps: float | None = None
    seed: int | None = None
    check_count: int | None = None
    objective_value: float | None = None

    @property
    def map(self) -> SineMap:
        return SineMap(self.p)


@dataclass(frozen=True)
class SpacingProfile:
    """Measured and limiting spacing ratios from the endpoint to the centre.

    ``ratios[i]`` is the gap between nodes ``i`` and ``i + 1`` divided by the
    largest gap; ``limits[i]`` is ``sqrt((i+1)^2 + mu^2) - sqrt(i^2 + mu^2)``.
    """

    ratios: np.ndarray
    limits: np.ndarray
    mu: float

    @property
    def min_ratio(self) -> float:
        return float(self.ratios[0])


def fixed_p(n: int, eps: float) -> float:
    """``2 arctan(eps**(1/n))``: the p whose convergence rate reaches ``eps`` at ``n``."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not (0.0 < eps < 1.0):
        raise ParameterError(f"eps={eps!r} must lie in (0, 1)")
    return 2.0 * math.atan(eps ** (1.0 / n))


def p_objective(f, n, interval, points):
    """Sum of absolute interpolation residuals at ``points``, as a function of p."""
    f = as_target(f)
    fz = f(points)

    def objective(p):
        try:
            approx = interpolate(f, n, SineMap(min(p, HALF_PI)), interval)
        except BadEvaluationError:
            return math.inf
        e = float(np.sum(np.abs(evaluate(approx, points) - fz)))
        return e if math.isfinite(e) else math.inf

    return objective


def _golden(fun, lo, hi, iterations):
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = fun(c), fun(d)
    for _ in range(iterations):
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = fun(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = fun(d)
    return (c, fc) if fc <= fd else (d, fd)


def adaptive_p(f, n: int, interval=DEFAULT_INTERVAL, check_count: int = 100,
               seed: int = DEFAULT_SEED, eps: float = 1e-15) -> PSelection:
    """Pick p minimising the 1-norm interpolation residual at random check points.

    A coarse scan of 64 values on ``[0, pi/2)`` (plus the fixed-formula value
    for ``eps`` and ``0.999 pi/2``) is refined by golden-section search on the
    bracket around the best scanned value.
    """
    a, b = _check_interval(interval)
    rng = np.random.default_rng(seed)
    z = rng.uniform(a, b, check_count)
    objective = p_objective(f, n, (a, b), z)

    grid = np.linspace(0.0, HALF_PI * (1.0 - SCAN_MARGIN), SCAN_POINTS)
    probes = [float(v) for v in grid] + [fixed_p(n, eps), 0.999 * HALF_PI]
    values = [objective(p) for p in probes]
    best = int(np.argmin(values[:SCAN_POINTS]))
    lo = grid[best - 1] if best > 0 else 0.0
    hi = grid[best + 1] if best < SCAN_POINTS - 1 else HALF_PI
    p_ref, e_ref = _golden(objective, lo, hi, GOLDEN_ITERATIONS)
    candidates = list(zip(probes, values)) + [(p_ref, e_ref), (lo, objective(lo)), (hi, objective(hi))]
    p_best, e_best = min(candidates, key=lambda c: (c[1], c[0]))
    if not math.isfinite(e_best):
        raise OptimizationFailure("objective is non-finite for every scanned p")
    return PSelection(
        p=SineMap(p_best).p, strategy="adaptive", eps=eps, seed=seed,
        check_count=check_count, objective_value=e_best,
    )


def spacing_limit(i, mu):
    i = np.asarray(i, dtype=float)
    return np.sqrt((i + 1.0) ** 2 + mu * mu) - np.sqrt(i * i + mu * mu)


def spacing_profile(n: int, eps: float) -> SpacingProfile:
    if n < 4 or n % 2:
        raise ParameterError("spacing profile needs an even n >= 4")
    x = nptp_nodes(n, SineMap(fixed_p(n, eps)))
    gaps = x[:-1] - x[1:]
    half = gaps[: n // 2]
    mu = math.log(eps) / math.pi
    return SpacingProfile(half / gaps.max(), spacing_limit(np.arange(n // 2), mu), mu)


def chebyshev_spacing(n: int):
    """Largest and smallest gap of the Chebyshev-Lobatto grid."""
    if n < 2 or n % 2:
        raise ParameterError("chebyshev_spacing needs an even n >= 2")
    gaps = -np.diff(cheb_lobatto_nodes(n))
    return float(gaps.max()), float(gaps.min())


def derivative_uniformity(n: int, eps: float) -> float:
    """Ratio of the endpoint to the centre derivative magnitude of the n-th basis function."""
    if n < 1 or n % 2 == 0:
        raise ParameterError("derivative uniformity needs an odd n")
    smap = SineMap(fixed_p(n, eps))
    return float(abs(basis_derivative(n, smap, 1.0)) / abs(basis_derivative(n, smap, 0.0)))


def derivative_uniformity_limit(eps: float) -> float:
    """Large-n limit of :func:`derivative_uniformity`.

    The ratio equals ``n cos(p)`` and ``cos(p) = (1 - eps^(2/n))/(1 + eps^(2/n))``
    under the fixed formula, so the limit is ``|ln eps|``.
    """
    return abs(math.log(eps))


def limit_ratio_count(eps: float, threshold: float = 0.9) -> int:
    """Number of gap indices ``i >= 0`` whose limiting spacing ratio is below ``threshold``."""
    mu = math.log(eps) / math.pi
    i = 0
    while spacing_limit(i, mu) < threshold:
        i += 1
    return i

"""Nonperiodic trigonometric polynomial approximants.

An approximant is ``sum a_k T_k(sin(p t)/sin(p))`` where ``t`` is the
argument affinely rescaled from ``[a, b]`` to ``[-1, 1]``. Working in
``y = sin(p t)/sin(p)`` turns every construction into ordinary Chebyshev
work on ``f(g(y))``, with ``g`` the inverse map.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import BadEvaluationError, DomainError, ParameterError
from .mapping import Family, SineMap, as_map, forward_map, inverse_map
from .polynomial import (
    ChebyshevSeries,
    cheb_interp_coeffs,
    cheb_lobatto_nodes,
    cheb_series_eval,
)

DEFAULT_INTERVAL = (-1.0, 1.0)


@dataclass(frozen=True)
class TargetFunction:
    """A vectorised real function with an optional known integral over [-1, 1].

    The evaluator must be reentrant; it may be called on arrays of nodes.
    """

    evaluator: Callable
    description: str = ""
    integral: float | None = None

    def __call__(self, x):
        with np.errstate(all="ignore"):
            v = np.asarray(self.evaluator(np.asarray(x, dtype=float)), dtype=float)
        v = np.broadcast_to(v, np.shape(x)).astype(float)
        if not np.all(np.isfinite(v)):
            raise BadEvaluationError(
                f"non-finite value from {self.description or 'target function'}"
            )
        return v[()]


def as_target(f) -> TargetFunction:
    if isinstance(f, TargetFunction):
        return f
    if not callable(f):
        raise TypeError("target must be callable")
    return TargetFunction(f, getattr(f, "__name__", "callable"))


def _check_interval(interval):
    a, b = (float(v) for v in interval)
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise ParameterError(f"invalid interval [{a}, {b}]")
    return a, b


def _to_unit(t, a, b):
    return (2.0 * t - (a + b)) / (b - a)


def _from_unit(x, a, b):
    return 0.5 * (a + b) + 0.5 * (b - a) * x


@dataclass(frozen=True)
class NptpApproximant:
    family: Family
    map: SineMap
    series: ChebyshevSeries
    interval: tuple = DEFAULT_INTERVAL

    @property
    def n(self) -> int:
        return self.series.degree

    @property
    def p(self) -> float:
        return self.map.p

    def __call__(self, x):
        return evaluate(self, x)


def nptp_nodes(n: int, smap) -> np.ndarray:
    """Mapped Lobatto nodes ``g(cos(i pi/n); p)`` on [-1, 1], descending."""
    x = inverse_map(as_map(smap), cheb_lobatto_nodes(n))
    x = np.array(x, dtype=float)
    x[0], x[-1] = 1.0, -1.0
    return x


def interpolate(f, n: int, smap, interval=DEFAULT_INTERVAL) -> NptpApproximant:
    """Interpolate ``f`` at the ``n + 1`` mapped Lobatto nodes."""
    smap = as_map(smap)
    a, b = _check_interval(interval)
    f = as_target(f)
    samples = f(_from_unit(nptp_nodes(n, smap), a, b))
    return NptpApproximant(Family.CHEBYSHEV, smap, cheb_interp_coeffs(samples), (a, b))


def project(f, n: int, smap, quad_points=None, interval=DEFAULT_INTERVAL) -> NptpApproximant:
    """Orthogonal projection onto the first ``n + 1`` mapped Chebyshev functions.

    The projection integral is discretised with ``quad_points`` Gauss-Chebyshev
    points in ``y``; default ``4 (n + 1)``.
    """
    if n < 0:
        raise ParameterError("n must be nonnegative")
    M = 4 * (n + 1) if quad_points is None else int(quad_points)
    if M < 2 * (n + 1):
        raise ParameterError(f"need at least {2 * (n + 1)} quadrature points, got {M}")
    smap = as_map(smap)
    a, b = _check_interval(interval)
    f = as_target(f)
    theta = np.pi * (2 * np.arange(M) + 1) / (2 * M)
    y = np.cos(theta)
    fy = f(_from_unit(inverse_map(smap, y), a, b))
    k = np.arange(n + 1)
    coeffs = (2.0 / M) * (np.cos(np.outer(k, theta)) @ fy)
    coeffs[0] *= 0.5
    return NptpApproximant(Family.CHEBYSHEV, smap, ChebyshevSeries(coeffs), (a, b))


def evaluate(approx: NptpApproximant, x):
    a, b = approx.interval
    x = np.asarray(x, dtype=float)
    slack = 1e-13 * (b - a)
    if np.any((x < a - slack) | (x > b + slack)) or np.any(np.isnan(x)):
        raise DomainError(f"point outside approximation interval [{a}, {b}]")
    t = np.clip(_to_unit(x, a, b), -1.0, 1.0)
    return cheb_series_eval(approx.series, forward_map(approx.map, t))


def basis_derivative(n: int, smap, x):
    """Derivative of ``T_n(sin(p x)/sin(p))`` with respect to ``x``.

    ``sin(n theta)/sin(theta)`` with ``cos(theta) = y`` is the second-kind
    polynomial ``U_{n-1}(y)``; evaluating that by recurrence resolves the
    removable singularities at ``theta = 0`` and ``theta = pi``.
    """
    if n < 1:
        raise ParameterError("basis derivative needs n >= 1")
    smap = as_map(smap)
    x = np.asarray(x, dtype=float)
    y = np.clip(forward_map(smap, x), -1.0, 1.0)
    u_prev, u = np.zeros_like(y), np.ones_like(y)
    for _ in range(n - 1):
        u_prev, u = u, 2.0 * y * u - u_prev
    scale = 1.0 if smap.is_identity else smap.p / smap.sin_p
    return (n * scale * u * np.cos(smap.p * x))[()]


def check_points(interval, count=100) -> np.ndarray:
    a, b = _check_interval(interval)
    if count < 2:
        raise ParameterError("need at least two check points")
    return np.linspace(a, b, count)


def error_norm(approx: NptpApproximant, f, check_count: int = 100) -> float:
    """Root of the summed squared residuals at equally spaced check points."""
    x = check_points(approx.interval, check_count)
    r = as_target(f)(x) - evaluate(approx, x)
    return float(np.sqrt(np.sum(r * r)))


def rate_predictor(smap, n: int) -> float:
    """Asymptotic error level ``tan(p/2)**n``."""
    smap = as_map(smap)
    if smap.is_identity:
        return 0.0
    if smap.p == math.pi / 2:
        return 1.0
    return math.tan(0.5 * smap.p) ** n

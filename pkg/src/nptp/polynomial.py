"""Classical Chebyshev and Legendre machinery on [-1, 1].

All routines accept scalars or numpy arrays for the evaluation point and
broadcast like numpy ufuncs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import BadEvaluationError, NumericalFailure, ParameterError


@dataclass(frozen=True, eq=False)
class ChebyshevSeries:
    """Coefficients ``a_0..a_n`` of ``sum a_k T_k(y)``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).ravel()
        if c.size < 1:
            raise ParameterError("a Chebyshev series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise ParameterError("Chebyshev coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __call__(self, y):
        return cheb_series_eval(self, y)

    def __eq__(self, other):
        if not isinstance(other, ChebyshevSeries):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        return f"ChebyshevSeries(degree={self.degree})"


@dataclass(frozen=True, eq=False)
class GaussLegendreRule:
    """Gauss-Legendre nodes (ascending) and weights on [-1, 1]."""

    m: int
    nodes: np.ndarray
    weights: np.ndarray


def cheb_eval(k, y):
    """Evaluate ``T_k(y)`` by the three-term recurrence."""
    if k < 0:
        raise ParameterError("Chebyshev degree must be nonnegative")
    y = np.asarray(y, dtype=float)
    t_prev, t = np.ones_like(y), y.copy()
    if k == 0:
        return t_prev[()]
    for _ in range(k - 1):
        t_prev, t = t, 2.0 * y * t - t_prev
    return t[()]


def cheb_series_eval(series, y):
    """Evaluate a Chebyshev series with Clenshaw's backward recurrence."""
    a = series.coeffs if isinstance(series, ChebyshevSeries) else np.asarray(series, float)
    y = np.asarray(y, dtype=float)
    b1 = np.zeros_like(y)
    b2 = np.zeros_like(y)
    for c in a[:0:-1]:
        b1, b2 = 2.0 * y * b1 - b2 + c, b1
    return (y * b1 - b2 + a[0])[()]


def cheb_lobatto_nodes(n: int) -> np.ndarray:
    """Chebyshev extreme points ``cos(i*pi/n)``, i = 0..n, descending."""
    if n < 1:
        raise ParameterError("need n >= 1 Lobatto intervals")
    i = np.arange(n + 1)
    # sin form keeps the symmetric pairs exact negatives and the centre at 0
    y = np.sin(np.pi * (n - 2 * i) / (2 * n))
    return y


@lru_cache(maxsize=32)
def _cosine_matrix(n):
    j = np.arange(n + 1)
    # reduce j*k mod 2n before scaling so large products keep full accuracy
    jk = np.outer(j, j) % (2 * n)
    mat = np.cos(np.pi * jk / n)
    mat.setflags(write=False)
    return mat


def cheb_interp_coeffs(samples) -> ChebyshevSeries:
    """Chebyshev coefficients of the interpolant through Lobatto samples.

    ``samples[i]`` must be the function value at ``cos(i*pi/n)``. This is a
    type-I discrete cosine transform written as a direct O(n^2) sum; an FFT
    based DCT-I is a drop-in replacement for large ``n``.
    """
    v = np.asarray(samples, dtype=float).ravel()
    if not np.all(np.isfinite(v)):
        raise BadEvaluationError("non-finite function sample")
    n = v.size - 1
    if n == 0:
        return ChebyshevSeries(v.copy())
    half = np.ones(n + 1)
    half[0] = half[-1] = 0.5
    a = (2.0 / n) * half * (_cosine_matrix(n) @ (half * v))
    return ChebyshevSeries(a)


def legendre_eval(k, y):
    """Return ``(P_k(y), P_k'(y))``."""
    if k < 0:
        raise ParameterError("Legendre degree must be nonnegative")
    y = np.asarray(y, dtype=float)
    p_prev, p = np.zeros_like(y), np.ones_like(y)
    dp = np.zeros_like(y)
    for j in range(1, k + 1):
        p_prev, p = p, ((2 * j - 1) * y * p - (j - 1) * p_prev) / j
        # (P_j)' = j P_{j-1} + y (P_{j-1})'
        dp = j * p_prev + y * dp
    return p[()], dp[()]


def gauss_legendre_rule(m: int, tol=1e-15, maxiter=100) -> GaussLegendreRule:
    """Gauss-Legendre rule by Newton iteration on the roots of ``P_m``.

    Raises
    ------
    NumericalFailure
        If any root fails to converge within ``maxiter`` steps.
    """
    if m < 1:
        raise ParameterError("quadrature order must be >= 1")
    i = np.arange(1, m + 1)
    y = np.cos(np.pi * (i - 0.25) / (m + 0.5))
    for _ in range(maxiter):
        p, dp = legendre_eval(m, y)
        dy = p / dp
        y = y - dy
        if np.all(np.abs(dy) <= tol):
            break
    else:
        raise NumericalFailure(
            f"Newton iteration for Legendre roots did not converge (m={m})"
        )
    _, dp = legendre_eval(m, y)
    w = 2.0 / ((1.0 - y * y) * dp * dp)
    # enforce exact symmetry: average mirrored pairs
    y = 0.5 * (y - y[::-1])
    w = 0.5 * (w + w[::-1])
    order = np.argsort(y)
    return GaussLegendreRule(m, y[order], w[order])

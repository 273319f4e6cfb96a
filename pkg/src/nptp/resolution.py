"""How many Chebyshev terms resolve an oscillation after the sine map.

A sine of ``m`` half-waves in the mapped variable becomes ``T_m(alpha y)``
with ``alpha = sin(p)``; its Chebyshev coefficients ``a_k^m`` oscillate up to
about ``k = alpha m`` and then decay monotonically.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import AnalysisFailure, ParameterError
from .polynomial import cheb_eval

MONOTONE_SLACK = 1e-15


def lemma1_check(k: int, p: float, x):
    """Both sides of ``cos(kpx) = (-1)^(k/2) T_k(sin px)`` (k even) or
    ``sin(kpx) = (-1)^((k-1)/2) T_k(sin px)`` (k odd)."""
    if k < 0:
        raise ParameterError("k must be nonnegative")
    x = np.asarray(x, dtype=float)
    t = cheb_eval(k, np.sin(p * x))
    if k % 2 == 0:
        return np.cos(k * p * x)[()], ((-1) ** (k // 2) * t)
    return np.sin(k * p * x)[()], ((-1) ** ((k - 1) // 2) * t)


@dataclass(frozen=True, eq=False)
class ResolutionTable:
    """``coeffs[m, k]`` holds ``a_k^m`` for ``k <= m``; entries above the diagonal are 0."""

    alpha: float
    max_m: int
    coeffs: np.ndarray

    def row(self, m: int) -> np.ndarray:
        if not 0 <= m <= self.max_m:
            raise ParameterError(f"row {m} outside table (max_m={self.max_m})")
        return self.coeffs[m, : m + 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "k", "a"])
        for m in range(self.max_m + 1):
            for k in range(m + 1):
                writer.writerow([m, k, f"{self.coeffs[m, k]:.17g}"])
        return buf.getvalue()


def resolution_coeffs(alpha: float, max_m: int) -> ResolutionTable:
    """Chebyshev coefficients of ``T_m(alpha y)`` for all ``m <= max_m``."""
    if not (0.0 < alpha <= 1.0):
        raise ParameterError("alpha must lie in (0, 1]")
    if max_m < 1:
        raise ParameterError("max_m must be >= 1")
    # one spare column so a_{k+1}^{m-1} reads 0 past the diagonal
    a = np.zeros((max_m + 1, max_m + 2))
    a[0, 0] = 1.0
    a[1, 1] = alpha
    c = np.ones(max_m + 1)
    c[0] = 2.0
    for m in range(2, max_m + 1):
        prev, prev2 = a[m - 1], a[m - 2]
        a[m, 0] = alpha * prev[1] - prev2[0]
        k = np.arange(1, m + 1)
        a[m, 1 : m + 1] = alpha * (c[k - 1] * prev[k - 1] + prev[k + 1]) - prev2[k]
    return ResolutionTable(float(alpha), int(max_m), a[:, : max_m + 1])


def resolution_threshold(table: ResolutionTable, m: int, tail_tol: float) -> int:
    """Index from which ``|a_k^m|`` decays monotonically.

    Only coefficients with ``k = m (mod 2)`` can be nonzero, so monotonicity
    is judged on that subsequence. Entries at or below ``tail_tol`` times the
    largest magnitude count as already resolved. A row whose last significant
    coefficient is also its largest has the one-term tail ``K = m``.

    Raises
    ------
    AnalysisFailure
        If the row holds non-finite values, so no tail can be established.
    """
    if tail_tol <= 0:
        raise ParameterError("tail_tol must be positive")
    row = np.abs(table.row(m))
    if not np.all(np.isfinite(row)):
        raise AnalysisFailure(f"non-finite coefficient in row {m}")
    ks = np.arange(m % 2, m + 1, 2)
    mags = row[ks]
    floor = tail_tol * mags.max()
    significant = mags > floor
    ks, mags = ks[significant], mags[significant]
    slack = MONOTONE_SLACK * row.max()
    start = len(mags) - 1
    while start > 0 and mags[start] < mags[start - 1] + slack:
        start -= 1
    return int(ks[start])


def nominal_threshold(alpha: float, m: int) -> int:
    return math.ceil(alpha * m)


def r_max(n: int, p: float) -> float:
    """Largest wavenumber ``r`` of ``sin(r pi x)`` that ``n`` mapped terms resolve."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not (0.0 < p <= math.pi / 2):
        raise ParameterError("p must lie in (0, pi/2]")
    return n * p / (math.pi * math.sin(p))

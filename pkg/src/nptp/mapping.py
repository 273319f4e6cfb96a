"""The sine change of variables ``y = sin(p x) / sin(p)`` and its weights."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError, ParameterError

HALF_PI = 0.5 * math.pi
# below this the map differs from the identity by O(p^2) < 1e-16
P_IDENTITY_CUTOFF = 1e-8


class Family(str, enum.Enum):
    CHEBYSHEV = "chebyshev"
    LEGENDRE = "legendre"


@dataclass(frozen=True)
class SineMap:
    """Map parameter ``p`` in ``[0, pi/2]``; ``p == 0`` is the identity."""

    p: float
    sin_p: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = float(self.p)
        if not (0.0 <= p <= HALF_PI):
            raise ParameterError(f"map parameter p={p!r} outside [0, pi/2]")
        if p < P_IDENTITY_CUTOFF:
            p = 0.0
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "sin_p", math.sin(p))

    @property
    def is_identity(self) -> bool:
        return self.p == 0.0

    def forward(self, x):
        return forward_map(self, x)

    def inverse(self, y):
        return inverse_map(self, y)


def as_map(p_or_map) -> SineMap:
    return p_or_map if isinstance(p_or_map, SineMap) else SineMap(p_or_map)


def forward_map(smap, x):
    """``sin(p x)/sin(p)``, or ``x`` itself when ``p == 0``."""
    smap = as_map(smap)
    x = np.asarray(x, dtype=float)
    if smap.is_identity:
        return x[()]
    return (np.sin(smap.p * x) / smap.sin_p)[()]


def inverse_map(smap, y):
    """``arcsin(y sin p)/p``, the inverse of :func:`forward_map`."""
    smap = as_map(smap)
    y = np.asarray(y, dtype=float)
    if smap.is_identity:
        return y[()]
    return (np.arcsin(np.clip(y * smap.sin_p, -1.0, 1.0)) / smap.p)[()]


def map_weight(smap, x, family=Family.CHEBYSHEV):
    """Weight function of the mapped family at ``x``.

    Legendre gives ``cos(p x)``. Chebyshev gives
    ``cos(p x) / sqrt(1 - sin^2(p x)/sin^2(p))`` and is singular at ``x = +-1``.
    """
    smap = as_map(smap)
    family = Family(family)
    x = np.asarray(x, dtype=float)
    cos_px = np.cos(smap.p * x)
    if family is Family.LEGENDRE:
        return cos_px[()]
    if np.any(np.abs(x) >= 1.0):
        raise DomainError("Chebyshev weight is singular at x = +-1")
    y = forward_map(smap, x)
    return (cos_px / np.sqrt(1.0 - y * y))[()]

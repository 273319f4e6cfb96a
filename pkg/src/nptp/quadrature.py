"""Gauss-Legendre quadrature after the sine change of variables."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .approx import _check_interval, _from_unit, as_target
from .mapping import SineMap, as_map, inverse_map
from .params import fixed_p
from .polynomial import gauss_legendre_rule


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    m: int
    p: float
    nodes: np.ndarray
    weights: np.ndarray

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "node", "weight"])
        for i, (x, w) in enumerate(zip(self.nodes, self.weights), start=1):
            writer.writerow([i, f"{x:.17g}", f"{w:.17g}"])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "m": self.m,
            "p": self.p,
            "nodes": [float(x) for x in self.nodes],
            "weights": [float(w) for w in self.weights],
        })

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(int(d["m"]), float(d["p"]), np.array(d["nodes"]), np.array(d["weights"]))


def nptp_quad_rule(m: int, smap) -> QuadratureRule:
    """m-point rule exact for ``q(sin(px)/sin p) cos(px)``, ``deg q <= 2m - 1``."""
    smap = as_map(smap)
    base = gauss_legendre_rule(m)
    if smap.is_identity:
        return QuadratureRule(m, 0.0, base.nodes.copy(), base.weights.copy())
    x = inverse_map(smap, base.nodes)
    w = (smap.sin_p / smap.p) * base.weights / np.cos(smap.p * x)
    return QuadratureRule(m, smap.p, x, w)


def fixed_quad_rule(m: int, eps: float) -> QuadratureRule:
    return nptp_quad_rule(m, SineMap(fixed_p(m, eps)))


def integrate(rule: QuadratureRule, f) -> float:
    return float(np.dot(as_target(f)(rule.nodes), rule.weights))


def integrate_interval(f, interval, m: int, smap) -> float:
    a, b = _check_interval(interval)
    rule = nptp_quad_rule(m, smap)
    f = as_target(f)
    return 0.5 * (b - a) * float(np.dot(f(_from_unit(rule.nodes, a, b)), rule.weights))

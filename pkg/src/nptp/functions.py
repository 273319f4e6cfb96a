"""Named test functions used by the benchmark tables."""
from __future__ import annotations

import math

import numpy as np

from .approx import TargetFunction, as_target
from .exceptions import FunctionNotFoundError
from .expression import Expression

_SPECS = {
    "example1": ("1/(2+cos(40*x))", lambda x: 1.0 / (2.0 + np.cos(40.0 * x)), None),
    "example2": ("x^5*cos(50*x)", lambda x: x**5 * np.cos(50.0 * x), None),
    "example3": ("exp(-30*x^2)", lambda x: np.exp(-30.0 * x**2), None),
    "example4": ("1/sqrt(1.1-x^2)", lambda x: 1.0 / np.sqrt(1.1 - x**2), None),
    "example5": (
        "sin(100*pi*x)+cos(100*pi*x)",
        lambda x: np.sin(100.0 * np.pi * x) + np.cos(100.0 * np.pi * x),
        None,
    ),
    "quad1": (
        "100*cos(100*x)/(2+sin(100*x))",
        lambda x: 100.0 * np.cos(100.0 * x) / (2.0 + np.sin(100.0 * x)),
        math.log((2.0 + math.sin(100.0)) / (2.0 - math.sin(100.0))),
    ),
    "quad2": ("cos(500*x)", lambda x: np.cos(500.0 * x), 2.0 * math.sin(500.0) / 500.0),
}


def builtin_functions() -> dict:
    """Registry of the seven benchmark functions, keyed by name."""
    return {
        name: TargetFunction(fn, text, integral)
        for name, (text, fn, integral) in _SPECS.items()
    }


def lookup(name: str) -> TargetFunction:
    try:
        text, fn, integral = _SPECS[name]
    except KeyError:
        raise FunctionNotFoundError(name) from None
    return TargetFunction(fn, text, integral)


def expression_twin(name: str) -> Expression:
    """The registry entry re-expressed through the expression parser."""
    return Expression(lookup(name).description)


def resolve_function(name_or_expr: str) -> TargetFunction:
    """Look ``name_or_expr`` up in the registry, else parse it as an expression."""
    if name_or_expr in _SPECS:
        return lookup(name_or_expr)
    return as_target(TargetFunction(Expression(name_or_expr), name_or_expr))

"""Nonperiodic trigonometric polynomial approximation and quadrature.

The basis ``T_k(sin(p x)/sin(p))`` interpolates between Chebyshev polynomials
(``p = 0``) and near-uniform trigonometric behaviour (``p -> pi/2``).
"""
from .approx import (
    NptpApproximant,
    TargetFunction,
    basis_derivative,
    error_norm,
    evaluate,
    interpolate,
    nptp_nodes,
    project,
    rate_predictor,
)
from .exceptions import (
    AnalysisFailure,
    BadEvaluationError,
    DomainError,
    ExpressionSyntaxError,
    FunctionNotFoundError,
    NptpError,
    NumericalFailure,
    OptimizationFailure,
    ParameterError,
    UnknownIdentifierError,
)
from .estimator import NptpRegressor, SineMapTransformer
from .expression import Expression, parse_expression
from .functions import builtin_functions, lookup, resolve_function
from .mapping import Family, SineMap, forward_map, inverse_map, map_weight
from .params import (
    PSelection,
    SpacingProfile,
    adaptive_p,
    chebyshev_spacing,
    derivative_uniformity,
    derivative_uniformity_limit,
    fixed_p,
    limit_ratio_count,
    spacing_profile,
)
from .polynomial import (
    ChebyshevSeries,
    GaussLegendreRule,
    cheb_eval,
    cheb_interp_coeffs,
    cheb_lobatto_nodes,
    cheb_series_eval,
    gauss_legendre_rule,
    legendre_eval,
)
from .quadrature import (
    QuadratureRule,
    fixed_quad_rule,
    integrate,
    integrate_interval,
    nptp_quad_rule,
)
from .resolution import (
    ResolutionTable,
    lemma1_check,
    r_max,
    resolution_coeffs,
    resolution_threshold,
)

__version__ = "0.1.0"

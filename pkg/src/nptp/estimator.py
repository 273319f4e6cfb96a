"""scikit-learn compatible wrappers around the sine map and Nptp fitting.

Both estimators take a single feature column. ``NptpRegressor`` fits
``sum a_k T_k(sin(p t)/sin(p))`` by least squares to sampled data, which makes
``p`` an ordinary hyperparameter for ``GridSearchCV``; ``fit_function``
interpolates a callable at the mapped Lobatto nodes instead.
"""
from __future__ import annotations

import numbers

import numpy as np
from numpy.polynomial import chebyshev
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .approx import NptpApproximant, _check_interval, _from_unit, _to_unit, evaluate, interpolate
from .exceptions import ParameterError
from .mapping import Family, SineMap, forward_map, inverse_map
from .params import DEFAULT_SEED, adaptive_p, fixed_p
from .polynomial import ChebyshevSeries


def _single_column(X):
    if X.shape[1] != 1:
        raise ValueError(f"expected a single feature column, got {X.shape[1]}")
    return X[:, 0]


def _resolve_p(p, n, eps):
    if isinstance(p, str):
        if p != "fixed":
            raise ParameterError(f"p must be a number, 'fixed' or 'adaptive', got {p!r}")
        return fixed_p(n, eps)
    if not isinstance(p, numbers.Real):
        raise ParameterError(f"p must be a number, 'fixed' or 'adaptive', got {p!r}")
    return float(p)


class SineMapTransformer(TransformerMixin, BaseEstimator):
    """Send ``t`` in ``interval`` to ``sin(p x)/sin(p)`` with ``x`` rescaled to [-1, 1].

    Parameters
    ----------
    p : float, default=1.0
        Map parameter in ``[0, pi/2]``.
    interval : tuple of float, default=(-1.0, 1.0)
        Domain of the input feature.
    """

    def __init__(self, p=1.0, interval=(-1.0, 1.0)):
        self.p = p
        self.interval = interval

    def fit(self, X, y=None):
        X = check_array(X, ensure_2d=True)
        _single_column(X)
        self.map_ = SineMap(self.p)
        self.interval_ = _check_interval(self.interval)
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "map_")
        t = _single_column(check_array(X))
        x = _to_unit(t, *self.interval_)
        return np.asarray(forward_map(self.map_, x)).reshape(-1, 1)

    def inverse_transform(self, Y):
        check_is_fitted(self, "map_")
        y = _single_column(check_array(Y))
        x = inverse_map(self.map_, np.clip(y, -1.0, 1.0))
        return _from_unit(np.asarray(x), *self.interval_).reshape(-1, 1)


class NptpRegressor(RegressorMixin, BaseEstimator):
    """Least-squares fit in the mapped Chebyshev basis of degree ``n_terms``.

    Parameters
    ----------
    n_terms : int, default=20
        Highest basis index ``n``; the fit has ``n + 1`` coefficients.
    p : float, "fixed" or "adaptive", default="fixed"
        Map parameter. ``"fixed"`` uses ``2 arctan(eps**(1/n))``.
        ``"adaptive"`` minimizes the residual at random check points and is
        only available through :meth:`fit_function`.
    eps : float, default=1e-15
        Target accuracy for ``p="fixed"``.
    interval : tuple of float or None, default=None
        Approximation interval; ``None`` takes the range of the training data.
    random_state : int, default=42
        Seed of the check points for ``p="adaptive"``.

    Attributes
    ----------
    approximant_ : NptpApproximant
    coef_ : ndarray of shape (n_terms + 1,)
    p_ : float
    """

    def __init__(self, n_terms=20, p="fixed", eps=1e-15, interval=None, random_state=DEFAULT_SEED):
        self.n_terms = n_terms
        self.p = p
        self.eps = eps
        self.interval = interval
        self.random_state = random_state

    def _setup(self, f=None, interval=(-1.0, 1.0)):
        if not isinstance(self.n_terms, numbers.Integral) or self.n_terms < 1:
            raise ParameterError("n_terms must be a positive integer")
        if isinstance(self.p, str) and self.p == "adaptive":
            if f is None:
                raise ParameterError("p='adaptive' needs a callable; use fit_function")
            p = adaptive_p(f, self.n_terms, interval, seed=self.random_state, eps=self.eps).p
        else:
            p = _resolve_p(self.p, self.n_terms, self.eps)
        smap = SineMap(p)
        self.p_ = smap.p
        return smap

    def fit(self, X, y):
        X, y = check_X_y(X, y, y_numeric=True)
        t = _single_column(X)
        smap = self._setup()
        interval = (t.min(), t.max()) if self.interval is None else self.interval
        a, b = _check_interval(interval)
        basis = chebyshev.chebvander(forward_map(smap, np.clip(_to_unit(t, a, b), -1, 1)), self.n_terms)
        coef, *_ = np.linalg.lstsq(basis, y, rcond=None)
        self._store(NptpApproximant(Family.CHEBYSHEV, smap, ChebyshevSeries(coef), (a, b)))
        return self

    def fit_function(self, f, interval=None):
        """Interpolate the callable ``f`` at the ``n_terms + 1`` mapped nodes."""
        interval = self.interval if interval is None else interval
        interval = (-1.0, 1.0) if interval is None else interval
        smap = self._setup(f, interval)
        approx = interpolate(f, self.n_terms, smap, interval)
        self._store(approx)
        return self

    def _store(self, approx):
        self.approximant_ = approx
        self.coef_ = approx.series.coeffs
        self.n_features_in_ = 1

    def predict(self, X):
        check_is_fitted(self, "approximant_")
        return np.asarray(evaluate(self.approximant_, _single_column(check_array(X))))

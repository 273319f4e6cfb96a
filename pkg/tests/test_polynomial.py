import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import chebyshev, legendre

from nptp.exceptions import BadEvaluationError, NumericalFailure, ParameterError
from nptp.polynomial import (
    ChebyshevSeries,
    cheb_eval,
    cheb_interp_coeffs,
    cheb_lobatto_nodes,
    cheb_series_eval,
    gauss_legendre_rule,
    legendre_eval,
)


def test_cheb_eval_examples():
    assert cheb_eval(0, 0.37) == 1.0
    assert cheb_eval(7, 1.0) == 1.0
    # 4(0.125) - 1.5
    assert cheb_eval(3, 0.5) == pytest.approx(-1.0, abs=1e-15)


def test_cheb_eval_bounded_and_recurrent(rng):
    y = rng.uniform(-1, 1, 1000)
    prev = cheb_eval(0, y)
    cur = cheb_eval(1, y)
    for k in range(1, 100):
        nxt = cheb_eval(k + 1, y)
        assert np.max(np.abs(nxt)) <= 1 + 1e-12
        np.testing.assert_allclose(nxt, 2 * y * cur - prev, atol=1e-12)
        prev, cur = cur, nxt


def test_cheb_eval_matches_trig_definition(rng):
    y = rng.uniform(-1, 1, 50)
    for k in (2, 11, 64):
        np.testing.assert_allclose(cheb_eval(k, y), np.cos(k * np.arccos(y)), atol=1e-12)


def test_cheb_eval_negative_degree():
    with pytest.raises(ParameterError):
        cheb_eval(-1, 0.0)


def test_series_eval_examples():
    assert cheb_series_eval(ChebyshevSeries([0, 0, 1]), 0.0) == -1.0
    assert cheb_series_eval(ChebyshevSeries([5]), 0.81) == 5.0
    # y^3 = (3 T1 + T3) / 4
    assert cheb_series_eval(ChebyshevSeries([0, 0.75, 0, 0.25]), 0.3) == pytest.approx(0.027, abs=1e-15)


def test_series_eval_agrees_with_numpy(rng):
    a = rng.normal(size=30)
    y = rng.uniform(-1, 1, 200)
    np.testing.assert_allclose(cheb_series_eval(ChebyshevSeries(a), y), chebyshev.chebval(y, a), atol=1e-12)


def test_series_rejects_nonfinite():
    with pytest.raises(ParameterError):
        ChebyshevSeries([1.0, np.nan])
    with pytest.raises(ParameterError):
        ChebyshevSeries([])


def test_lobatto_nodes():
    np.testing.assert_allclose(cheb_lobatto_nodes(2), [1, 0, -1], atol=0)
    s = math.sqrt(2) / 2
    np.testing.assert_allclose(cheb_lobatto_nodes(4), [1, s, 0, -s, -1], atol=1e-16)
    for n in (1, 5, 17, 200):
        y = cheb_lobatto_nodes(n)
        assert y[0] == 1.0 and y[-1] == -1.0
        assert np.all(np.diff(y) < 0)


def test_interp_coeffs_examples():
    a = cheb_interp_coeffs(np.ones(9)).coeffs
    np.testing.assert_allclose(a, [1] + [0] * 8, atol=1e-15)
    for n in (2, 3, 8):
        y = cheb_lobatto_nodes(n)
        a = cheb_interp_coeffs(2 * y**2 - 1).coeffs
        expect = np.zeros(n + 1)
        expect[2] = 1
        np.testing.assert_allclose(a, expect, atol=1e-13)
    y = cheb_lobatto_nodes(5)
    np.testing.assert_allclose(cheb_interp_coeffs(y**3).coeffs, [0, 0.75, 0, 0.25, 0, 0], atol=1e-15)


def test_interp_coeffs_reproduces_samples(rng):
    n = 37
    y = cheb_lobatto_nodes(n)
    v = np.exp(y) * np.sin(5 * y)
    s = cheb_interp_coeffs(v)
    np.testing.assert_allclose(cheb_series_eval(s, y), v, rtol=1e-12, atol=1e-12 * np.abs(v).max())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-10, 10), min_size=2, max_size=40))
def test_interp_coeffs_inverts_sampling(coeffs):
    a = np.array(coeffs)
    n = len(a) - 1
    v = cheb_series_eval(ChebyshevSeries(a), cheb_lobatto_nodes(n))
    np.testing.assert_allclose(cheb_interp_coeffs(v).coeffs, a, atol=1e-11)


def test_interp_coeffs_matches_numpy_oracle():
    n = 24
    f = lambda t: 1 / (1 + 4 * t**2)
    ours = cheb_interp_coeffs(f(cheb_lobatto_nodes(n))).coeffs
    # numpy fits through first-kind points; compare function values instead
    y = np.linspace(-1, 1, 301)
    lobatto = chebyshev.Chebyshev.fit(cheb_lobatto_nodes(n), f(cheb_lobatto_nodes(n)), n)
    np.testing.assert_allclose(chebyshev.chebval(y, ours), lobatto(y), atol=1e-12)


def test_interp_coeffs_bad_sample():
    with pytest.raises(BadEvaluationError):
        cheb_interp_coeffs([1.0, np.inf, 0.0])


def test_legendre_eval_examples():
    assert legendre_eval(1, 0.3)[0] == pytest.approx(0.3)
    assert legendre_eval(5, 1.0)[0] == pytest.approx(1.0, abs=1e-15)
    assert legendre_eval(2, 0.0)[0] == pytest.approx(-0.5)


def test_legendre_derivative_finite_difference(rng):
    h = 1e-6
    for k in (1, 4, 9, 20):
        y = rng.uniform(-0.95, 0.95, 20)
        _, dp = legendre_eval(k, y)
        fd = (legendre_eval(k, y + h)[0] - legendre_eval(k, y - h)[0]) / (2 * h)
        np.testing.assert_allclose(dp, fd, rtol=1e-6, atol=1e-8)


def test_legendre_eval_matches_numpy(rng):
    y = rng.uniform(-1, 1, 100)
    for k in (0, 3, 30):
        c = np.zeros(k + 1)
        c[k] = 1
        np.testing.assert_allclose(legendre_eval(k, y)[0], legendre.legval(y, c), atol=1e-13)


def test_gauss_legendre_examples():
    r = gauss_legendre_rule(1)
    np.testing.assert_allclose(r.nodes, [0.0], atol=0)
    np.testing.assert_allclose(r.weights, [2.0])
    r = gauss_legendre_rule(2)
    np.testing.assert_allclose(r.nodes, [-0.5773502692, 0.5773502692], atol=1e-10)
    np.testing.assert_allclose(r.weights, [1.0, 1.0], atol=1e-14)


@pytest.mark.parametrize("m", [1, 2, 3, 7, 20, 50, 200, 1000])
def test_gauss_legendre_structure(m):
    r = gauss_legendre_rule(m)
    assert abs(r.weights.sum() - 2) <= 1e-13
    assert np.all(np.diff(r.nodes) > 0)
    assert np.all(r.weights > 0)
    np.testing.assert_array_equal(r.nodes, -r.nodes[::-1])
    np.testing.assert_array_equal(r.weights, r.weights[::-1])
    p, dp = legendre_eval(m, r.nodes)
    # distance to the true root, one Newton step away
    assert np.max(np.abs(p / dp)) <= 1e-14


@pytest.mark.parametrize("m", [3, 50, 300])
def test_gauss_legendre_matches_numpy_oracle(m):
    x, w = legendre.leggauss(m)
    r = gauss_legendre_rule(m)
    np.testing.assert_allclose(r.nodes, x, atol=1e-14)
    np.testing.assert_allclose(r.weights, w, atol=1e-14)


def test_gauss_legendre_monomial_exactness():
    for m in range(1, 51):
        r = gauss_legendre_rule(m)
        for j in range(2 * m):
            exact = 0.0 if j % 2 else 2.0 / (j + 1)
            assert abs(np.dot(r.nodes**j, r.weights) - exact) <= 1e-12, (m, j)


def test_gauss_legendre_nonconvergence():
    with pytest.raises(NumericalFailure):
        gauss_legendre_rule(40, maxiter=1)
    with pytest.raises(ParameterError):
        gauss_legendre_rule(0)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import eval_gegenbauer, gammaln

from ballharm import (
    DomainError,
    gamma_ratio,
    gegenbauer,
    lambda_coeff,
    log_gamma,
    sph_dim,
    zonal,
)
from ballharm.expansion import basis_value
from ballharm.quadrature import zonal_sphere_integral


def test_log_gamma_examples():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    # half-integer value against the independent C library implementation
    assert log_gamma(0.5) == pytest.approx(math.lgamma(0.5), rel=1e-14)
    assert log_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-13)


def test_log_gamma_matches_lgamma_over_range():
    # for x <= 30 the Gamma value itself is certified to 1e-13 relative;
    # beyond that one ulp of the log already moves exp by more, so the log
    # is compared at machine precision instead
    for x in np.linspace(0.5, 30, 119):
        assert math.exp(log_gamma(float(x)) - math.lgamma(float(x))) == pytest.approx(
            1.0, rel=1e-13
        )
    for x in np.geomspace(30.0, 1e4, 41):
        ours, ref = log_gamma(float(x)), math.lgamma(float(x))
        assert abs(ours - ref) <= 4e-15 * abs(ref)


def test_log_gamma_finite_at_huge_arguments():
    assert math.isfinite(log_gamma(1e6))


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-3.0)


def test_gamma_ratio_examples():
    assert gamma_ratio(3.0, 1.0) == pytest.approx(2.0, rel=1e-14)
    assert gamma_ratio(5.5, 2.5) == pytest.approx(4.5 * 3.5 * 2.5, rel=1e-13)
    assert gamma_ratio(1001.0, 1000.0) == pytest.approx(1000.0, rel=1e-12)


def test_gamma_ratio_domain():
    with pytest.raises(DomainError):
        gamma_ratio(-1.0, 2.0)
    with pytest.raises(DomainError):
        gamma_ratio(2.0, 0.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=1.0, max_value=100.0, allow_nan=False))
def test_gamma_ratio_recurrence(a):
    assert abs(gamma_ratio(a + 1.0, a) - a) / a <= 1e-12


def test_gamma_ratio_recurrence_bulk():
    rng = np.random.default_rng(1789)
    a = rng.uniform(1.0, 100.0, size=10_000)
    vals = np.exp(gammaln(a + 1.0) - gammaln(a))
    assert np.max(np.abs(vals - a) / a) <= 1e-12


def test_gegenbauer_examples():
    assert gegenbauer(0, 1.0, 0.7) == 1.0
    assert gegenbauer(1, 1.0, 0.7) == pytest.approx(1.4, rel=1e-15)
    # C_2^lam(t) = -lam + 2 lam (1 + lam) t^2 has a root at t = 1/2 for lam = 1
    assert gegenbauer(2, 1.0, 0.5) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("lam", [0.5, 1.0, 1.5, 2.0])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 5, 10, 25, 60, 100])
def test_gegenbauer_value_at_one(k, lam):
    expected = math.exp(gammaln(k + 2 * lam) - gammaln(2 * lam) - gammaln(k + 1))
    assert gegenbauer(k, lam, 1.0) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.5])
@pytest.mark.parametrize("k", [2, 5, 17, 40])
def test_gegenbauer_against_scipy(k, lam):
    ts = np.linspace(-1.0, 1.0, 23)
    ours = gegenbauer(k, lam, ts)
    ref = eval_gegenbauer(k, lam, ts)
    scale = np.max(np.abs(ref)) + 1.0
    assert np.max(np.abs(ours - ref)) / scale < 1e-11


def test_gegenbauer_domain():
    with pytest.raises(DomainError):
        gegenbauer(3, 0.0, 0.5)
    with pytest.raises(DomainError):
        gegenbauer(3, -0.7, 0.5)
    with pytest.raises(DomainError):
        gegenbauer(3, 1.0, 1.5)


def _harmonic_dimension_by_rank(n, k):
    """Independent count of degree-k harmonic homogeneous polynomials:
    nullity of the Laplacian acting on homogeneous polynomials."""
    from itertools import combinations_with_replacement

    monos = sorted(set(combinations_with_replacement(range(n), k)))
    index = {m: i for i, m in enumerate(monos)}
    if k < 2:
        return len(monos)
    lower = sorted(set(combinations_with_replacement(range(n), k - 2)))
    lindex = {m: i for i, m in enumerate(lower)}
    L = np.zeros((len(lower), len(monos)))
    for m, col in index.items():
        exps = [m.count(v) for v in range(n)]
        for v in range(n):
            if exps[v] >= 2:
                low = list(exps)
                low[v] -= 2
                key = tuple(sorted(sum(([d] * low[d] for d in range(n)), [])))
                L[lindex[key], col] += exps[v] * (exps[v] - 1)
    return len(monos) - np.linalg.matrix_rank(L)


@pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (2, 5), (3, 4), (4, 3), (5, 2)])
def test_sph_dim_against_laplacian_rank(n, k):
    assert sph_dim(n, k) == _harmonic_dimension_by_rank(n, k)


def test_sph_dim_examples():
    assert sph_dim(2, 3) == 2
    assert sph_dim(3, 2) == 5
    for n in range(2, 7):
        assert sph_dim(n, 0) == 1
        assert sph_dim(n, 1) == n


def test_zonal_examples():
    for n in (2, 3, 4):
        assert zonal(n, 0, 0.37) == 1.0
    ts = np.linspace(-1, 1, 11)
    assert np.allclose(zonal(3, 1, ts), 3.0 * ts, rtol=1e-14, atol=1e-14)
    theta = 1.234
    assert zonal(2, 4, math.cos(theta)) == pytest.approx(2.0 * math.cos(4 * theta), rel=1e-12)


def test_zonal_degree_one_matches_addition_theorem_sum():
    # sum over an explicit orthonormal degree-1 basis on the sphere in R^3
    rng = np.random.default_rng(5)
    pole = np.array([0.0, 0.0, 1.0])
    for _ in range(5):
        p = rng.standard_normal(3)
        p /= np.linalg.norm(p)
        s = sum(
            basis_value(3, 1, j, pole) * basis_value(3, 1, j, p) for j in (1, 2, 3)
        )
        assert zonal(3, 1, float(p @ pole)) == pytest.approx(s, rel=1e-12, abs=1e-12)


def test_zonal_at_one_equals_dimension():
    for n in range(2, 7):
        for k in range(0, 61, 5):
            d = sph_dim(n, k)
            assert abs(zonal(n, k, 1.0) - d) / d <= 1e-10


def test_zonal_orthogonality_under_quadrature():
    for n in (2, 3, 4):
        for k in range(0, 5):
            for l in range(0, 5):
                val = zonal_sphere_integral(
                    n, lambda t: zonal(n, k, t) * zonal(n, l, t), 40
                )
                expected = sph_dim(n, k) if k == l else 0.0
                assert val == pytest.approx(expected, abs=5e-11 * max(sph_dim(n, k), 1))


def test_zonal_domain():
    with pytest.raises(DomainError):
        zonal(3, 2, 1.5)
    with pytest.raises(DomainError):
        zonal(1, 2, 0.5)


def test_lambda_coeff_examples():
    assert lambda_coeff(2, 0, 1.0) == pytest.approx(2.0, rel=1e-14)
    assert lambda_coeff(2, 1, 1.0) == pytest.approx(6.0, rel=1e-14)


def test_lambda_coeff_asymptote():
    # fitted power law over k in [20, 80] evaluated at k = 40; the finite-k
    # curvature of log gamma_k leaves a ~1.3% residual at the midpoint
    n, m = 3, 2.0
    ks = np.arange(20, 81, dtype=float)
    vals = lambda_coeff(n, ks, m)
    coef = np.polyfit(np.log(ks), np.log(vals), 1)
    fitted_at_40 = math.exp(coef[1] + coef[0] * math.log(40.0))
    assert lambda_coeff(n, 40, m) == pytest.approx(fitted_at_40, rel=0.02)
    # the local power approaches m + 1 from below like (m+1) - (sum c_i)/k
    assert 2.7 <= coef[0] <= m + 1.0
    far = np.arange(800, 2001, 40, dtype=float)
    far_slope = np.polyfit(np.log(far), np.log(lambda_coeff(n, far, m)), 1)[0]
    assert far_slope == pytest.approx(m + 1.0, abs=0.01)


def test_lambda_coeff_monotone_in_degree():
    for n in (2, 3, 5):
        for m in (-0.5, 0.5, 2.0):
            vals = lambda_coeff(n, np.arange(0, 201), m)
            assert np.all(np.diff(vals) > 0.0)
            assert np.all(vals > 0.0)


def test_lambda_coeff_domain():
    with pytest.raises(DomainError):
        lambda_coeff(3, 2, -1.0)

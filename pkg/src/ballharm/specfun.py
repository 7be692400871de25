"""Scalar special functions for spherical-harmonic series on the unit ball.

Everything here reduces to log-Gamma arithmetic and the ultraspherical
three-term recurrence:

* ``log_gamma`` / ``gamma_ratio``  -- Gamma ratios evaluated in log space so
  that quantities like Gamma(k + n/2 + m + 1) / Gamma(k + n/2) stay finite
  far beyond the direct-overflow point near 171.
* ``gegenbauer``                   -- ultraspherical polynomials C_k^lam(t).
* ``sph_dim``                      -- dimension d_k of the degree-k spherical
  harmonics on the unit sphere in R^n.
* ``zonal``                        -- the degree-k zonal harmonic through its
  dependence on the cosine of the angle, normalized so that the value at
  cosine 1 equals d_k (the addition-theorem normalization for a basis that
  is orthonormal under normalized surface measure).
* ``lambda_coeff``                 -- the coefficient ratio
  Gamma(k + n/2 + m + 1) / (Gamma(k + n/2) Gamma(m + 1)) of the fractional
  radial derivative of order m + 1.

All functions are pure and accept either scalars or numpy arrays in their
"mathematical" argument; scalars in, scalars out.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import DomainError

__all__ = [
    "GammaRatio",
    "ZonalEvalParams",
    "log_gamma",
    "gamma_ratio",
    "gegenbauer",
    "sph_dim",
    "zonal",
    "lambda_coeff",
]


def log_gamma(x):
    """Natural log of Gamma(x) for x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("log_gamma requires positive arguments")
    out = gammaln(x)
    return float(out) if out.ndim == 0 else out


def gamma_ratio(a, b):
    """Gamma(a)/Gamma(b) via exp(log_gamma(a) - log_gamma(b)), a, b > 0."""
    out = np.exp(log_gamma(a) - log_gamma(b))
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class GammaRatio:
    """A ratio Gamma(a)/Gamma(b) kept in log form.

    Useful when ratios are chained or compared at arguments large enough
    that the ratio itself overflows.
    """

    numerator_arg: float
    denominator_arg: float
    log_value: float

    @classmethod
    def of(cls, a, b):
        if a <= 0.0 or b <= 0.0:
            raise DomainError("GammaRatio requires positive arguments")
        return cls(float(a), float(b), float(gammaln(a) - gammaln(b)))

    @property
    def value(self):
        return float(np.exp(self.log_value))


@dataclass(frozen=True)
class ZonalEvalParams:
    """Validated (dim, degree, cosine) triple for a zonal harmonic value."""

    dim: int
    degree: int
    cosine: float

    def __post_init__(self):
        if self.dim < 2:
            raise DomainError(f"dim must be >= 2, got {self.dim}")
        if self.degree < 0:
            raise DomainError(f"degree must be >= 0, got {self.degree}")
        if abs(self.cosine) > 1.0 + 1e-14:
            raise DomainError(f"cosine must lie in [-1, 1], got {self.cosine}")


def gegenbauer(k, lam, t):
    """Ultraspherical polynomial C_k^lam(t) by the forward recurrence.

    C_0 = 1, C_1 = 2*lam*t, and
    k C_k = 2 t (k + lam - 1) C_{k-1} - (k + 2*lam - 2) C_{k-2}.

    Requires lam > -1/2, lam != 0 (the degenerate lam = 0 limit is handled
    by `zonal` for dimension 2), |t| <= 1, and k <= 500; the forward
    recurrence is well conditioned on [-1, 1] for the degrees used here.
    """
    if k < 0:
        raise DomainError(f"degree must be >= 0, got {k}")
    if k > 500:
        raise DomainError("gegenbauer supports degrees up to 500")
    if lam <= -0.5 or lam == 0.0:
        raise DomainError(f"lambda must be > -1/2 and nonzero, got {lam}")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0 + 1e-14):
        raise DomainError("gegenbauer requires |t| <= 1")
    c_prev = np.ones_like(t)
    if k == 0:
        return float(c_prev) if c_prev.ndim == 0 else c_prev
    c = 2.0 * lam * t
    for j in range(2, k + 1):
        c, c_prev = (2.0 * t * (j + lam - 1.0) * c - (j + 2.0 * lam - 2.0) * c_prev) / j, c
    return float(c) if c.ndim == 0 else c


def sph_dim(n, k):
    """Dimension of the space of spherical harmonics of degree k on the
    unit sphere in R^n: d_0 = 1, d_k = C(n+k-1, k) - C(n+k-3, k-2)."""
    if n < 2:
        raise DomainError(f"dim must be >= 2, got {n}")
    if k < 0:
        raise DomainError(f"degree must be >= 0, got {k}")
    if k == 0:
        return 1
    import math

    if k == 1:
        return n
    return math.comb(n + k - 1, k) - math.comb(n + k - 3, k - 2)


def _sph_dim_array(n, kmax):
    """d_k for k = 0..kmax as a float vector, via stable product formulas."""
    k = np.arange(kmax + 1, dtype=float)

    def homog(kk):
        # C(n + kk - 1, n - 1) = prod_{i=1..n-1} (kk + i)/i
        out = np.ones_like(kk)
        for i in range(1, n):
            out = out * (kk + i) / i
        return out

    d = homog(k) - np.where(k >= 2, homog(k - 2.0), 0.0)
    d[0] = 1.0
    return d


def zonal(n, k, t):
    """Zonal harmonic of degree k on the sphere in R^n at cosine t.

    Normalized so that the value at t = 1 is d_k = sph_dim(n, k); this is
    the normalization under which the zonal harmonic is the sum
    sum_j y_j(x') y_j(y') over an orthonormal basis (normalized surface
    measure) of the degree-k space.  For n >= 3 this equals
    d_k * C_k^lam(t) / C_k^lam(1) with lam = (n-2)/2; for n = 2 it is
    1 for k = 0 and 2 cos(k arccos t) otherwise.
    """
    if n < 2:
        raise DomainError(f"dim must be >= 2, got {n}")
    if k < 0:
        raise DomainError(f"degree must be >= 0, got {k}")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0 + 1e-14):
        raise DomainError("zonal requires |t| <= 1")
    t = np.clip(t, -1.0, 1.0)
    d_k = float(sph_dim(n, k))
    out = d_k * _normalized_gegenbauer(n, k, t)
    return float(out) if out.ndim == 0 else out


def _normalized_gegenbauer(n, k, t):
    """u_k(t) = C_k^lam(t)/C_k^lam(1), lam = (n-2)/2, valid for all n >= 2.

    Runs the recurrence in normalized form, so every intermediate lies in
    [-1, 1]; for n = 2 it degenerates to the Chebyshev polynomials, which
    matches the 2 cos(k theta) convention after multiplying by d_k.
    """
    t = np.asarray(t, dtype=float)
    lam = (n - 2) / 2.0
    u_prev = np.ones_like(t)
    if k == 0:
        return u_prev
    u = t.copy()
    for j in range(2, k + 1):
        u, u_prev = (2.0 * t * (j + lam - 1.0) * u - (j - 1.0) * u_prev) / (j + 2.0 * lam - 1.0), u
    return u


def lambda_coeff(n, k, m):
    """Coefficient gamma_k of the order-(m+1) fractional radial derivative:
    Gamma(k + n/2 + m + 1) / (Gamma(k + n/2) Gamma(m + 1)), m > -1.

    Evaluated in log space; positive and strictly increasing in k.
    """
    if n < 2:
        raise DomainError(f"dim must be >= 2, got {n}")
    if m <= -1.0:
        raise DomainError(f"order must be > -1, got {m}")
    k = np.asarray(k, dtype=float)
    if np.any(k < 0):
        raise DomainError("degree must be >= 0")
    out = np.exp(_log_lambda_coeff(n, k, m))
    return float(out) if out.ndim == 0 else out


def _log_lambda_coeff(n, k, m):
    k = np.asarray(k, dtype=float)
    return gammaln(k + n / 2.0 + m + 1.0) - gammaln(k + n / 2.0) - gammaln(m + 1.0)

"""Weighted radial quadrature, spherical quadrature, and mixed norms.

Radial rules are Gauss-Jacobi rules for integrals of the form
int_0^1 (1-r)^s phi(r) dr with s > -1, so that the near-boundary
integrable singularities appearing in the weighted norms (exponent in
(-1, 0)) are part of the weight, never sampled by the integrand.

Spherical rules integrate under NORMALIZED surface measure (total mass 1).
For n = 2 the rule is uniform in the angle; for n >= 3 it is a product of
Gauss rules in the polar cosines (weight (1-t^2)^((d-2)/2) on each level)
and a uniform azimuth.  A rule of resolution R integrates spherical
polynomials of degree <= R exactly.

The mixed norm of A^{p,q}_alpha composes them:

    ( int_0^1 M_q(f, r)^p  w(r) r^(n-1) dr )^(1/p)

with w(r) = (1-r^2)^alpha under the defining convention and
w(r) = (1-r)^(alpha*p - 1) under the convention used by the multiplier
theorem machinery.  Every norm is computed at two refinement levels;
disagreement beyond tolerance raises AccuracyError instead of returning a
silently wrong number.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi

from .errors import AccuracyError, DomainError
from .expansion import _basis_matrix
from ._zonalseries import zonal_abs_power_mean, zonal_series_values

__all__ = [
    "QuadratureRule",
    "SpaceParams",
    "radial_rule",
    "sphere_rule",
    "zonal_sphere_integral",
    "mean_norm",
    "mixed_norm",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes, positive weights, a domain tag, and the exactness degree.

    Radial rules: nodes are radii in (0, 1), domain_tag = ("radial", s);
    the weights sum to 1/(s+1).  Spherical rules: nodes are unit vectors,
    domain_tag = ("sphere", n); the weights sum to 1.
    """

    nodes: object
    weights: object
    domain_tag: tuple
    exactness: int

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if np.any(weights <= 0):
            raise DomainError("quadrature weights must be positive")
        nodes = nodes.copy()
        weights = weights.copy()
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)


def radial_rule(s, N):
    """N-point Gauss-Jacobi rule for int_0^1 (1-r)^s phi(r) dr, s > -1.

    Exact for polynomials phi of degree <= 2N - 1.
    """
    if s <= -1.0:
        raise DomainError(f"weight exponent must be > -1, got {s}")
    if N < 1:
        raise DomainError(f"rule size must be >= 1, got {N}")
    x, w = roots_jacobi(N, s, 0.0)
    r = 0.5 * (x + 1.0)
    weights = w * 2.0 ** (-(s + 1.0))
    return QuadratureRule(r, weights, ("radial", float(s)), 2 * N - 1)


def _polar_rule(weight_power, npts):
    """Gauss rule for int_-1^1 f(t) (1-t^2)^(weight_power/2) dt."""
    x, w = roots_jacobi(npts, weight_power / 2.0, weight_power / 2.0)
    return x, w


def sphere_rule(n, resolution):
    """Product quadrature on the unit sphere in R^n, normalized measure.

    Exact for spherical polynomials of degree <= resolution.  Supported
    for 2 <= n <= 6 (node count grows as resolution^(n-1)).
    """
    if resolution < 1:
        raise DomainError(f"resolution must be >= 1, got {resolution}")
    if not 2 <= n <= 6:
        raise DomainError(f"sphere rules are built for 2 <= n <= 6, got {n}")
    if n == 2:
        M = resolution + 1
        theta = 2.0 * math.pi * np.arange(M) / M
        nodes = np.stack([np.cos(theta), np.sin(theta)], axis=1)
        weights = np.full(M, 1.0 / M)
        return QuadratureRule(nodes, weights, ("sphere", 2), resolution)
    # polar cosine t: x = (sqrt(1-t^2) * y, t) with y on the sphere in R^(n-1)
    npolar = (resolution + 2) // 2
    t, wt = _polar_rule(n - 3, npolar)
    sub = sphere_rule(n - 1, resolution)
    sint = np.sqrt(np.clip(1.0 - t**2, 0.0, None))
    nodes = np.concatenate(
        [
            sint[:, None, None] * sub.nodes[None, :, :],
            np.broadcast_to(t[:, None, None], (t.size, sub.nodes.shape[0], 1)),
        ],
        axis=2,
    ).reshape(-1, n)
    weights = (wt[:, None] * sub.weights[None, :]).reshape(-1)
    weights = weights / weights.sum()
    return QuadratureRule(nodes, weights, ("sphere", n), resolution)


def zonal_sphere_integral(n, phi, resolution):
    """Integral over the sphere of phi(<x', e>) under normalized measure.

    Reduces by rotation invariance to a one-dimensional Gauss integral in
    the cosine, c_n int_-1^1 phi(t) (1-t^2)^((n-3)/2) dt, with c_n fixed
    so that phi == 1 integrates to 1 (for n = 2 this is the angular mean).
    """
    if n < 2:
        raise DomainError(f"dim must be >= 2, got {n}")
    if resolution < 1:
        raise DomainError(f"resolution must be >= 1, got {resolution}")
    t, w = _polar_rule(n - 3, resolution)
    vals = np.asarray(phi(t), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise DomainError("integrand returned non-finite values")
    return float((w * vals).sum() / w.sum())


@dataclass(frozen=True)
class SpaceParams:
    """Mixed-norm space parameters (p, q, alpha) plus a weight convention.

    convention = "definition": radial weight (1 - r^2)^alpha r^(n-1) dr,
    needing alpha > -1.  convention = "theorem": (1 - r)^(alpha*p - 1)
    r^(n-1) dr, needing alpha * p > 0, the weighting under which the
    multiplier criterion is formulated.
    """

    p: float
    q: float
    alpha: float
    convention: str = "definition"

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0:
            raise DomainError(f"p and q must be positive, got p={self.p}, q={self.q}")
        if self.convention == "definition":
            if self.alpha <= -1.0:
                raise DomainError(f"alpha must be > -1, got {self.alpha}")
        elif self.convention == "theorem":
            if self.alpha * self.p <= 0.0:
                raise DomainError(
                    f"theorem convention needs alpha*p > 0, got {self.alpha * self.p}"
                )
        else:
            raise DomainError(f"convention must be 'definition' or 'theorem', got {self.convention!r}")

    @property
    def radial_weight_exponent(self):
        """Exponent s of the Jacobi factor (1-r)^s absorbed by the rule."""
        if self.convention == "definition":
            return self.alpha
        return self.alpha * self.p - 1.0

    def radial_extra_factor(self, r):
        """Residual smooth factor of the weight beyond (1-r)^s, without r^(n-1)."""
        if self.convention == "definition":
            return (1.0 + r) ** self.alpha
        return np.ones_like(np.asarray(r, dtype=float))


def _zonal_q_mean(f, q, r, rtol=1e-10):
    """M_q(f, r) for a zonal expansion via the one-dimensional reduction."""
    rk = r ** np.arange(f.max_degree + 1, dtype=float)
    val = zonal_abs_power_mean(f.dim, f.coeffs * rk, q, rtol=rtol)
    return val ** (1.0 / q)


def mean_norm(f, q, r, rule):
    """Spherical q-mean M_q(f, r) = ( int |f(r x')|^q dx' )^(1/q).

    q = inf takes the maximum over the rule nodes.  Zonal expansions with
    finite q are reduced to an adaptively integrated one-dimensional
    integral (the rule still supplies the nodes for q = inf); full
    expansions are integrated with the supplied rule.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    if rule.domain_tag != ("sphere", f.dim):
        raise DomainError(
            f"rule domain {rule.domain_tag} does not match an expansion in dim {f.dim}"
        )
    from .expansion import evaluate

    if q == math.inf:
        vals = np.abs(evaluate(f, r, rule.nodes))
        return float(vals.max())
    if q <= 0:
        raise DomainError(f"q must be positive, got {q}")
    if f.kind == "zonal":
        return _zonal_q_mean(f, q, r)
    vals = np.abs(evaluate(f, r, rule.nodes))
    return float((rule.weights * vals**q).sum() ** (1.0 / q))


def _radial_profile_norm(mean_fn, params, n, radial_N):
    """( int_0^1 mean_fn(r)^p w(r) r^(n-1) dr )^(1/p) on one radial level."""
    rule = radial_rule(params.radial_weight_exponent, radial_N)
    r = rule.nodes
    means = np.array([mean_fn(ri) for ri in r])
    integrand = means**params.p * params.radial_extra_factor(r) * r ** (n - 1)
    return float((rule.weights * integrand).sum()) ** (1.0 / params.p)


def _mixed_norm_levels(f, params, radial_N, sphere_res):
    """(coarse, fine) mixed-norm values at consecutive refinement levels."""

    def level(N, res):
        if f.kind == "zonal":
            mean_fn = lambda r: _zonal_q_mean(f, params.q, r)
        else:
            rule = sphere_rule(f.dim, res)
            mean_fn = lambda r: mean_norm(f, params.q, r, rule)
        return _radial_profile_norm(mean_fn, params, f.dim, N)

    return level(radial_N, sphere_res), level(2 * radial_N, 2 * sphere_res)


def mixed_norm(f, params, radial_N=48, sphere_res=None, accuracy_rtol=1e-8):
    """Mixed norm of the expansion under the given space parameters.

    Computed at two refinement levels (doubling both the radial rule and
    the spherical resolution); if the levels disagree by more than
    accuracy_rtol relatively, an AccuracyError carrying both values is
    raised.  For p = q this agrees with the direct double-integral norm of
    the weighted p-space by construction of the quadrature.
    """
    if radial_N < 1:
        raise DomainError(f"radial_N must be >= 1, got {radial_N}")
    if sphere_res is None:
        sphere_res = max(2 * f.max_degree + 2, 8)
    coarse, fine = _mixed_norm_levels(f, params, radial_N, sphere_res)
    if abs(fine - coarse) > accuracy_rtol * max(abs(fine), 1e-300):
        raise AccuracyError("mixed norm refinement disagreement", coarse, fine, accuracy_rtol)
    return fine

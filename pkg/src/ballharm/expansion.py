"""Coefficient representation of harmonic functions on the unit ball.

A harmonic function on the ball is stored through the coefficients of its
spherical-harmonic expansion f(r x') = sum_k r^k sum_j c_k^(j) y_j^(k)(x').
Two kinds are supported:

* ``zonal`` -- rotation-invariant about a pole: one coefficient per degree,
  f(r x') = sum_k r^k c_k Z_k(<pole, x'>).  Works in any dimension n >= 2.
* ``full``  -- one coefficient per basis function, available for n in
  {2, 3} where explicit real orthonormal bases are implemented.

The bases are orthonormal under NORMALIZED surface measure.  For n = 2 the
degree-k block is (sqrt(2) cos k*theta, sqrt(2) sin k*theta); for n = 3 it
consists of the real spherical harmonics ordered by azimuthal index
-k, ..., k and scaled by sqrt(4*pi) relative to the unit-measure-on-4pi
convention.  Under this normalization the degree-k addition sum equals
d_k = sph_dim(n, k) and the Poisson kernel has the closed form
(1 - r^2)/|x - y'|^n with no area factor.

Operators: pointwise evaluation, coefficientwise convolution, multiplier
application, the fractional radial derivative of order m + 1, the Poisson
kernel, the Bergman-type kernel of order m (coefficients 2 gamma_k), and a
guaranteed truncation-degree bound for both kernels.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln, lpmv

from . import reports
from .errors import (
    DomainError,
    IncompatibleExpansionError,
    UnsupportedBasisError,
)
from .specfun import _log_lambda_coeff, _sph_dim_array, lambda_coeff, sph_dim
from ._zonalseries import zonal_series_values

__all__ = [
    "DEGREE_CAP",
    "HarmonicExpansion",
    "MultiplierSequence",
    "KernelSpec",
    "basis_value",
    "evaluate",
    "convolve",
    "apply_multiplier",
    "frac_derivative",
    "poisson",
    "q_kernel",
    "tail_degree",
    "save_expansion",
    "load_expansion",
    "save_multiplier",
    "load_multiplier",
]

# Construction cap on expansion degree.  Keeps r^k, gamma_k and the basis
# evaluations comfortably inside double precision on the radial grids used
# by the norm and kernel routines; series needed beyond this cap (deep
# boundary asymptotics) are handled by the multiplier engine on plain
# coefficient arrays, not through this type.
DEGREE_CAP = 2048


def _as_unit_vector(pole, dim):
    pole = np.asarray(pole, dtype=float)
    if pole.shape != (dim,):
        raise DomainError(f"pole must be a vector of length {dim}")
    norm = float(np.linalg.norm(pole))
    if abs(norm - 1.0) > 1e-12:
        raise DomainError(f"pole must be a unit vector, |pole| = {norm!r}")
    pole = pole.copy()
    pole.flags.writeable = False
    return pole


def _validate_blocks(dim, kind, coeffs):
    """Coerce coefficients to the canonical layout and check block lengths."""
    if kind == "zonal":
        arr = np.asarray(coeffs, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("zonal coefficients must be a nonempty flat sequence")
        arr = arr.copy()
        arr.flags.writeable = False
        return arr
    if kind == "full":
        if dim not in (2, 3):
            raise UnsupportedBasisError(
                f"full expansions require dim in {{2, 3}}, got {dim}"
            )
        blocks = []
        for k, block in enumerate(coeffs):
            arr = np.asarray(block, dtype=float)
            d_k = sph_dim(dim, k)
            if arr.shape != (d_k,):
                raise DomainError(
                    f"block {k} has length {arr.size}, expected d_{k} = {d_k}"
                )
            arr = arr.copy()
            arr.flags.writeable = False
            blocks.append(arr)
        if not blocks:
            raise DomainError("full coefficients must contain at least block 0")
        return tuple(blocks)
    raise DomainError(f"kind must be 'zonal' or 'full', got {kind!r}")


@dataclass(frozen=True)
class HarmonicExpansion:
    """Truncated spherical-harmonic expansion of a harmonic function."""

    dim: int
    kind: str
    coeffs: object
    pole: object = None

    def __post_init__(self):
        if self.dim < 2:
            raise DomainError(f"dim must be >= 2, got {self.dim}")
        object.__setattr__(self, "coeffs", _validate_blocks(self.dim, self.kind, self.coeffs))
        if self.kind == "zonal":
            if self.pole is None:
                raise DomainError("zonal expansions require a pole")
            object.__setattr__(self, "pole", _as_unit_vector(self.pole, self.dim))
        elif self.pole is not None:
            raise DomainError("full expansions carry no pole")
        if self.max_degree > DEGREE_CAP:
            raise DomainError(
                f"max degree {self.max_degree} exceeds the construction cap {DEGREE_CAP}"
            )

    @property
    def max_degree(self):
        if self.kind == "zonal":
            return self.coeffs.size - 1
        return len(self.coeffs) - 1

    def block(self, k):
        """Degree-k coefficients as an array (length d_k, or 1 for zonal)."""
        if self.kind == "zonal":
            return self.coeffs[k : k + 1]
        return self.coeffs[k]

    def scaled(self, factors):
        """New expansion with block k multiplied by factors[k]."""
        factors = np.asarray(factors, dtype=float)
        if self.kind == "zonal":
            return HarmonicExpansion(self.dim, "zonal", self.coeffs * factors, self.pole)
        blocks = [b * factors[k] for k, b in enumerate(self.coeffs)]
        return HarmonicExpansion(self.dim, "full", blocks)


@dataclass(frozen=True)
class MultiplierSequence:
    """Candidate coefficient multiplier, in the same block layout."""

    dim: int
    kind: str
    values: object

    def __post_init__(self):
        if self.dim < 2:
            raise DomainError(f"dim must be >= 2, got {self.dim}")
        object.__setattr__(self, "values", _validate_blocks(self.dim, self.kind, self.values))
        if self.max_degree > DEGREE_CAP:
            raise DomainError(
                f"max degree {self.max_degree} exceeds the construction cap {DEGREE_CAP}"
            )

    @property
    def max_degree(self):
        if self.kind == "zonal":
            return self.values.size - 1
        return len(self.values) - 1

    @classmethod
    def ones(cls, dim, max_degree, kind="zonal"):
        if kind == "zonal":
            return cls(dim, "zonal", np.ones(max_degree + 1))
        return cls(dim, "full", [np.ones(sph_dim(dim, k)) for k in range(max_degree + 1)])


@dataclass(frozen=True)
class KernelSpec:
    """Parameters of a zonal reproducing kernel expansion."""

    dim: int
    pole: object
    max_degree: int
    order: float = field(default=0.0)

    def __post_init__(self):
        if self.dim < 2:
            raise DomainError(f"dim must be >= 2, got {self.dim}")
        if self.order <= -1.0:
            raise DomainError(f"kernel order must be > -1, got {self.order}")
        if not 0 <= self.max_degree <= DEGREE_CAP:
            raise DomainError(
                f"max_degree must lie in [0, {DEGREE_CAP}], got {self.max_degree}"
            )
        object.__setattr__(self, "pole", _as_unit_vector(self.pole, self.dim))


# ---------------------------------------------------------------------------
# orthonormal bases for n = 2, 3
# ---------------------------------------------------------------------------


def _basis_block(dim, k, points):
    """Values of the degree-k orthonormal basis at unit vectors.

    points: array of shape (M, dim).  Returns shape (M, d_k).
    """
    points = np.asarray(points, dtype=float)
    if dim == 2:
        theta = np.arctan2(points[:, 1], points[:, 0])
        if k == 0:
            return np.ones((points.shape[0], 1))
        return np.stack(
            [math.sqrt(2.0) * np.cos(k * theta), math.sqrt(2.0) * np.sin(k * theta)],
            axis=1,
        )
    if dim == 3:
        ct = np.clip(points[:, 2], -1.0, 1.0)
        phi = np.arctan2(points[:, 1], points[:, 0])
        cols = []
        for m_az in range(-k, k + 1):
            ma = abs(m_az)
            norm = math.sqrt(
                (2.0 if ma > 0 else 1.0)
                * (2 * k + 1)
                * math.exp(gammaln(k - ma + 1) - gammaln(k + ma + 1))
            )
            leg = lpmv(ma, k, ct)
            if m_az < 0:
                cols.append(norm * leg * np.sin(ma * phi))
            elif m_az == 0:
                cols.append(norm * leg)
            else:
                cols.append(norm * leg * np.cos(ma * phi))
        return np.stack(cols, axis=1)
    raise UnsupportedBasisError(f"explicit bases exist only for dim 2 and 3, got {dim}")


def basis_value(n, k, j, point):
    """Value of the j-th (1-based) orthonormal spherical harmonic of
    degree k at a unit vector, n in {2, 3}.

    Ordering: n = 2 -> (sqrt(2) cos k*theta, sqrt(2) sin k*theta) with the
    constant 1 at k = 0; n = 3 -> real spherical harmonics by azimuthal
    index -k..k (sine branch, zonal, cosine branch).
    """
    d_k = sph_dim(n, k)
    if not 1 <= j <= d_k:
        raise IndexError(f"j = {j} outside block range [1, {d_k}] at degree {k}")
    point = np.asarray(point, dtype=float).reshape(1, -1)
    if point.shape[1] != n:
        raise DomainError(f"point must have {n} components")
    if abs(np.linalg.norm(point) - 1.0) > 1e-8:
        raise DomainError("point must be a unit vector")
    return float(_basis_block(n, k, point)[0, j - 1])


def _basis_matrix(dim, max_degree, points):
    """Concatenated basis values, shape (M, sum_k d_k)."""
    return np.concatenate(
        [_basis_block(dim, k, points) for k in range(max_degree + 1)], axis=1
    )


def _flatten_full(f):
    return np.concatenate(f.coeffs)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------


def evaluate(f, r, direction):
    """Evaluate the expansion at radius r in [0, 1) and unit direction(s).

    direction may be a single vector of length dim or an array (M, dim);
    the return matches (scalar or length-M array).
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    direction = np.asarray(direction, dtype=float)
    scalar = direction.ndim == 1
    pts = np.atleast_2d(direction)
    if pts.shape[1] != f.dim:
        raise DomainError(f"direction must have {f.dim} components")
    norms = np.linalg.norm(pts, axis=1)
    if np.any(np.abs(norms - 1.0) > 1e-8):
        raise DomainError("directions must be unit vectors")
    rk = r ** np.arange(f.max_degree + 1, dtype=float)
    if f.kind == "zonal":
        t = pts @ f.pole
        out = zonal_series_values(f.dim, f.coeffs * rk, t)
        out = np.atleast_1d(out)
    else:
        weights = np.concatenate(
            [f.coeffs[k] * rk[k] for k in range(f.max_degree + 1)]
        )
        out = _basis_matrix(f.dim, f.max_degree, pts) @ weights
    return float(out[0]) if scalar else out


def _check_compatible(f, g, what):
    if f.dim != g.dim:
        raise IncompatibleExpansionError(f"{what}: dimension mismatch {f.dim} != {g.dim}")
    if f.kind != g.kind:
        raise IncompatibleExpansionError(f"{what}: kind mismatch {f.kind} != {g.kind}")
    fp = getattr(f, "pole", None)
    gp = getattr(g, "pole", None)
    if fp is not None and gp is not None and not np.allclose(fp, gp, atol=1e-12):
        raise IncompatibleExpansionError(f"{what}: pole mismatch")


def convolve(f, g):
    """Coefficientwise (Hadamard) product of two expansions.

    Same dim, kind and (for zonal) pole are required; the result is
    truncated to the smaller degree.
    """
    _check_compatible(f, g, "convolve")
    K = min(f.max_degree, g.max_degree)
    if f.kind == "zonal":
        return HarmonicExpansion(f.dim, "zonal", f.coeffs[: K + 1] * g.coeffs[: K + 1], f.pole)
    blocks = [f.coeffs[k] * g.coeffs[k] for k in range(K + 1)]
    return HarmonicExpansion(f.dim, "full", blocks)


def apply_multiplier(c, f):
    """Apply a coefficient multiplier to an expansion.

    A zonal multiplier applied to a full expansion broadcasts c_k across
    the degree-k block.  The result is truncated to the smaller degree.
    """
    if c.dim != f.dim:
        raise IncompatibleExpansionError(
            f"apply_multiplier: dimension mismatch {c.dim} != {f.dim}"
        )
    K = min(c.max_degree, f.max_degree)
    if c.kind == "zonal" and f.kind == "zonal":
        return HarmonicExpansion(f.dim, "zonal", c.values[: K + 1] * f.coeffs[: K + 1], f.pole)
    if c.kind == "zonal" and f.kind == "full":
        blocks = [f.coeffs[k] * c.values[k] for k in range(K + 1)]
        return HarmonicExpansion(f.dim, "full", blocks)
    if c.kind == "full" and f.kind == "full":
        blocks = [f.coeffs[k] * c.values[k] for k in range(K + 1)]
        return HarmonicExpansion(f.dim, "full", blocks)
    raise IncompatibleExpansionError(
        "a full multiplier cannot act on a zonal expansion"
    )


def frac_derivative(f, m):
    """Fractional radial derivative of order m + 1: block k is multiplied
    by gamma_k = Gamma(k + n/2 + m + 1)/(Gamma(k + n/2) Gamma(m + 1))."""
    if m <= -1.0:
        raise DomainError(f"order must be > -1, got {m}")
    k = np.arange(f.max_degree + 1)
    return f.scaled(lambda_coeff(f.dim, k, m))


def poisson(spec):
    """Poisson kernel as a zonal expansion: all coefficients 1.

    Truncates the closed form (1 - r^2)/|r x' - pole|^n; the order field
    of the spec is ignored.
    """
    return HarmonicExpansion(
        spec.dim, "zonal", np.ones(spec.max_degree + 1), spec.pole
    )


def q_kernel(spec):
    """Bergman-type kernel of order m: zonal coefficients 2 gamma_k(n, m).

    Equals the order-(m+1) fractional derivative of the Poisson kernel
    scaled by 2.
    """
    k = np.arange(spec.max_degree + 1)
    coeffs = 2.0 * lambda_coeff(spec.dim, k, spec.order)
    return HarmonicExpansion(spec.dim, "zonal", coeffs, spec.pole)


def _kernel_log_terms(kind, n, m, kmax, r):
    """log of coeff_k * d_k * r^k for the named kernel families, 0 < r < 1."""
    k = np.arange(kmax + 1, dtype=float)
    logs = np.log(_sph_dim_array(n, kmax)) + k * math.log(r)
    if kind == "q_kernel":
        logs = logs + math.log(2.0) + _log_lambda_coeff(n, k, m)
    elif kind != "poisson":
        raise DomainError(f"unknown kernel kind {kind!r}")
    return logs


def tail_degree(kind, n, r_max, tol, m=None):
    """Smallest K whose guaranteed tail bound is below tol.

    The bound is sum_{k>K} coeff_k d_k r_max^k < tol with |Z_k| <= d_k,
    estimated by the first omitted term times a geometric factor whose
    ratio dominates every later term ratio.  Evaluating the series to this
    K keeps the truncation error below tol everywhere in |x| <= r_max.

    kind is "poisson" or "q_kernel" (the latter requires the order m).
    """
    if not 0.0 < r_max < 1.0:
        raise DomainError(f"r_max must lie in (0, 1), got {r_max}")
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if kind == "q_kernel":
        if m is None or m <= -1.0:
            raise DomainError("q_kernel tail degree requires an order m > -1")
        growth = m + 1.0
    elif kind == "poisson":
        growth = 0.0
    else:
        raise DomainError(f"unknown kernel kind {kind!r}")

    kmax = 64
    log_tol = math.log(tol)
    while True:
        logs = _kernel_log_terms(kind, n, m if kind == "q_kernel" else 0.0, kmax, r_max)
        k = np.arange(kmax, dtype=float)  # candidate K values 0..kmax-1
        ratio = r_max * (1.0 + growth / (k + 1.0 + n / 2.0)) * (1.0 + (n - 1.0) / (k + 1.0))
        usable = ratio < 1.0 - 0.25 * (1.0 - r_max)
        with np.errstate(divide="ignore", invalid="ignore"):
            bound_ok = usable & (logs[1:] - np.log1p(-np.where(usable, ratio, 0.5)) < log_tol)
        hits = np.nonzero(bound_ok)[0]
        if hits.size:
            return int(hits[0])
        if kmax > 4_000_000:
            raise DomainError(
                f"tail bound cannot reach tol={tol:g} at r_max={r_max:g} within supported degrees"
            )
        kmax *= 2


# ---------------------------------------------------------------------------
# coefficient file format
# ---------------------------------------------------------------------------


def _coeff_payload(dim, kind, coeffs, pole):
    payload = {"dim": dim, "kind": kind}
    if pole is not None:
        payload["pole"] = [float(v) for v in pole]
    if kind == "zonal":
        payload["coeffs"] = [float(v) for v in coeffs]
    else:
        payload["coeffs"] = [[float(v) for v in block] for block in coeffs]
    return payload


def save_expansion(f, path):
    """Write an expansion to a coefficient file (17-digit decimal floats,
    bit-exact on reload)."""
    reports.dump_to(path, _coeff_payload(f.dim, f.kind, f.coeffs, f.pole))


def load_expansion(path):
    payload = reports.load_from(path)
    return expansion_from_payload(payload)


def expansion_from_payload(payload):
    for key in ("dim", "kind", "coeffs"):
        if key not in payload:
            raise DomainError(f"coefficient file is missing the field {key!r}")
    kind = payload["kind"]
    pole = payload.get("pole")
    if kind == "zonal" and pole is None:
        raise DomainError("coefficient file with kind 'zonal' is missing the field 'pole'")
    return HarmonicExpansion(int(payload["dim"]), kind, payload["coeffs"], pole)


def save_multiplier(c, path):
    """Write a multiplier sequence; same schema as expansions, no pole."""
    reports.dump_to(path, _coeff_payload(c.dim, c.kind, c.values, None))


def load_multiplier(path):
    payload = reports.load_from(path)
    for key in ("dim", "kind", "coeffs"):
        if key not in payload:
            raise DomainError(f"multiplier file is missing the field {key!r}")
    return MultiplierSequence(int(payload["dim"]), payload["kind"], payload["coeffs"])

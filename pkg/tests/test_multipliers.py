import math

import numpy as np
import pytest

from ballharm import (
    DomainError,
    MultiplierSequence,
    TheoremParams,
    UsageError,
    condition2_integral,
    condition2_sup,
    equivalence_verdict,
    multiplier_family,
    probe_operator_norm,
    sph_dim,
)
from ballharm.multipliers import _CURVE_CACHE, _family_from_values
from ballharm._zonalseries import zonal_series_values
from ballharm.specfun import lambda_coeff


def params_for(dim=3, p=1.0, alpha=0.5, beta=0.25, m=2.0):
    return TheoremParams(p=p, alpha=alpha, beta=beta, m=m, dim=dim)


# ---------------------------------------------------------------------------
# hypothesis window
# ---------------------------------------------------------------------------


def test_theorem_params_validation():
    with pytest.raises(DomainError, match="0 < p <= 1"):
        TheoremParams(p=1.5, alpha=0.5, beta=0.5, m=2.0, dim=3)
    with pytest.raises(DomainError, match="alpha"):
        TheoremParams(p=1.0, alpha=1.0, beta=0.5, m=2.0, dim=3)
    with pytest.raises(DomainError, match="beta"):
        TheoremParams(p=1.0, alpha=0.5, beta=0.0, m=2.0, dim=3)
    with pytest.raises(DomainError, match="m >"):
        TheoremParams(p=0.25, alpha=0.5, beta=0.5, m=2.0, dim=3)  # needs m > 3
    TheoremParams(p=0.25, alpha=0.5, beta=0.5, m=3.5, dim=3)


def test_family_parsing():
    assert multiplier_family("ones").values(3).tolist() == [1, 1, 1, 1]
    pl = multiplier_family("powerlaw:0.5")
    assert pl.values(3)[1] == pytest.approx(2.0 ** (-0.5))
    fin = multiplier_family("finite:2")
    assert fin.values(4).tolist() == [1, 1, 1, 0, 0]
    with pytest.raises(DomainError):
        multiplier_family("gibberish")
    with pytest.raises(DomainError):
        multiplier_family("powerlaw:x")


# ---------------------------------------------------------------------------
# the growth integral
# ---------------------------------------------------------------------------


def test_condition2_integral_constant_multiplier():
    # only the degree-0 term: the integrand is |gamma_0| everywhere
    p = TheoremParams(p=1.0, alpha=0.5, beta=0.25, m=1.0, dim=2)
    for rho in (0.1, 0.5, 0.9, 0.99):
        assert condition2_integral("finite:0", p, rho) == pytest.approx(2.0, rel=1e-12)


def test_condition2_integral_domain():
    p = params_for()
    with pytest.raises(DomainError):
        condition2_integral("ones", p, 0.0)
    with pytest.raises(DomainError):
        condition2_integral("ones", p, 1.0)


def test_condition2_full_matches_zonal_for_broadcast_blocks():
    # a full multiplier with constant blocks acts exactly like the zonal one
    p = params_for(dim=3)
    cz = MultiplierSequence(3, "zonal", [1.0, 0.7, 0.4, 0.2])
    cf = MultiplierSequence(
        3, "full", [np.full(sph_dim(3, k), cz.values[k]) for k in range(4)]
    )
    rng = np.random.default_rng(2)
    for rho in (0.3, 0.8):
        z = condition2_integral(cz, p, rho)
        for _ in range(3):
            y = rng.standard_normal(3)
            y /= np.linalg.norm(y)
            # kinked integrand: the fixed rule converges like resolution^-2
            fv = condition2_integral(cf, p, rho, direction=y)
            assert fv == pytest.approx(z, rel=2e-4)
            fine = condition2_integral(cf, p, rho, direction=y, resolution=512)
            assert fine == pytest.approx(z, rel=1e-5)


def test_condition2_scaling_covariance():
    p = params_for()
    base = MultiplierSequence(3, "zonal", [1.0, 0.5, 0.25, 0.125])
    doubled = MultiplierSequence(3, "zonal", 2.0 * base.values)
    tripled = MultiplierSequence(3, "zonal", 3.0 * base.values)
    for rho in (0.4, 0.9):
        v = condition2_integral(base, p, rho)
        # doubling is exact in binary floating point
        assert condition2_integral(doubled, p, rho) == 2.0 * v
        assert condition2_integral(tripled, p, rho) == pytest.approx(3.0 * v, rel=1e-13)


def test_monotone_domination_at_pole():
    # at the pole every zonal harmonic is positive, so the series value is
    # monotone in nonnegative coefficients
    n, m = 3, 2.0
    k = np.arange(6, dtype=float)
    gam = lambda_coeff(n, k, m)
    small = gam * np.array([1, 0.5, 0.3, 0.2, 0.1, 0.05])
    large = gam * np.array([1, 0.6, 0.4, 0.2, 0.15, 0.05])
    s = 0.7**k
    assert zonal_series_values(n, small * s, 1.0) <= zonal_series_values(n, large * s, 1.0) + 1e-10


@pytest.mark.parametrize("n,m,expect", [(2, 1.0, 2.0), (2, 2.0, 3.0), (3, 2.0, 3.0)])
def test_identity_multiplier_exponent(n, m, expect):
    p = TheoremParams(p=1.0, alpha=0.5, beta=0.5, m=m, dim=n)
    rep = condition2_sup("ones", p, j_levels=list(range(3, 11)))
    assert rep.fitted_exponent == pytest.approx(expect, abs=0.1)


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


def test_condition2_finite_multiplier_bounded():
    rep = condition2_sup("finite:5", params_for(alpha=0.5, beta=0.25), j_levels=list(range(3, 10)))
    assert rep.verdict == "bounded"
    # a polynomial multiplier gives bounded fractional derivative: Phi -> 0
    assert rep.values[-1] < rep.values[0]


def test_condition2_identity_verdicts():
    unb = condition2_sup("ones", params_for(alpha=0.5, beta=0.25))
    assert unb.verdict == "unbounded"
    assert unb.phi_exponent == pytest.approx(0.25, abs=0.05)
    bnd = condition2_sup("ones", params_for(alpha=0.25, beta=0.5))
    assert bnd.verdict == "bounded"
    assert bnd.phi_exponent == pytest.approx(-0.25, abs=0.05)


def test_condition2_grid_validation():
    with pytest.raises(DomainError):
        condition2_sup("ones", params_for(), j_levels=[3, 4, 15])
    with pytest.raises(DomainError):
        condition2_sup("ones", params_for(), j_levels=[5, 4, 3])


def test_probe_identity_equal_weights_flat():
    p = params_for(alpha=0.5, beta=0.5)
    rep = probe_operator_norm("ones", p, sizes=[1 - 2.0 ** (-j) for j in range(3, 8)])
    assert rep.verdict == "bounded"
    for ratio in rep.norm_ratios:
        assert ratio == pytest.approx(1.0, rel=1e-6)


def test_probe_growth_matches_weight_gap():
    p = params_for(alpha=0.5, beta=0.25)
    rep = probe_operator_norm("ones", p, sizes=[1 - 2.0 ** (-j) for j in range(3, 10)])
    assert rep.growth_fit == pytest.approx(p.alpha - p.beta, abs=0.1)
    assert rep.verdict == "unbounded"


def test_probe_zero_multiplier():
    zero = MultiplierSequence(3, "zonal", [0.0, 0.0, 0.0])
    rep = probe_operator_norm(zero, params_for(), sizes=[0.875, 0.9375])
    assert all(r == 0.0 for r in rep.norm_ratios)
    assert rep.verdict == "bounded"


def test_probe_random_polynomials_family():
    p = params_for(alpha=0.5, beta=0.5)
    rep = probe_operator_norm("ones", p, family="random_polynomials", sizes=[4, 8, 16], seed=7)
    assert rep.probe_family == "random_polynomials"
    assert rep.verdict == "bounded"
    for ratio in rep.norm_ratios:
        assert ratio == pytest.approx(1.0, rel=1e-4)


def test_probe_empty_sizes_usage_error():
    with pytest.raises(UsageError):
        probe_operator_norm("ones", params_for(), sizes=[])
    with pytest.raises(UsageError):
        probe_operator_norm("ones", params_for(), family="unheard_of")


def test_equivalence_verdicts():
    p_unb = params_for(alpha=0.5, beta=0.25)
    cond2 = condition2_sup("ones", p_unb)
    probe = probe_operator_norm("ones", p_unb, sizes=[1 - 2.0 ** (-j) for j in range(3, 10)])
    check = equivalence_verdict(cond2, probe)
    assert check.verdict == "PASS"
    assert check.measured["condition2_verdict"] == "unbounded"

    p_bnd = params_for(alpha=0.25, beta=0.5)
    cond2b = condition2_sup("finite:5", p_bnd)
    probeb = probe_operator_norm("finite:5", p_bnd, sizes=[1 - 2.0 ** (-j) for j in range(3, 9)])
    assert equivalence_verdict(cond2b, probeb).verdict == "PASS"


def test_equivalence_rejects_mismatched_reports():
    cond2 = condition2_sup("ones", params_for(alpha=0.5, beta=0.25))
    probe = probe_operator_norm("ones", params_for(alpha=0.25, beta=0.5),
                                sizes=[0.875, 0.9375])
    with pytest.raises(UsageError):
        equivalence_verdict(cond2, probe)


def test_reports_reproducible_after_cache_clear():
    p = params_for(alpha=0.5, beta=0.25)
    _CURVE_CACHE.clear()
    first = condition2_sup("ones", p, j_levels=list(range(3, 8)))
    _CURVE_CACHE.clear()
    second = condition2_sup("ones", p, j_levels=list(range(3, 8)))
    assert first.raw_integrals == second.raw_integrals
    assert first.fitted_exponent == second.fitted_exponent


def test_sequence_family_padding_is_zero():
    fam = _family_from_values(np.array([1.0, 2.0]))
    assert fam.values(4).tolist() == [1.0, 2.0, 0.0, 0.0, 0.0]

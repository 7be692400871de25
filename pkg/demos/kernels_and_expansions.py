"""Tour of harmonic expansions and zonal kernels on the unit ball.

Builds the Poisson kernel and the order-m Bergman-type kernel as zonal
expansions, compares the truncated Poisson series against its closed form,
and shows the coefficient operators (convolution, multiplier application,
fractional radial derivative) in action.
"""

import numpy as np

from ballharm import (
    HarmonicExpansion,
    KernelSpec,
    MultiplierSequence,
    apply_multiplier,
    convolve,
    evaluate,
    frac_derivative,
    poisson,
    q_kernel,
    tail_degree,
)

n = 3
pole = np.array([0.0, 0.0, 1.0])

# --- Poisson kernel: series vs closed form --------------------------------
r_max, tol = 0.9, 1e-10
K = tail_degree("poisson", n, r_max, tol)
print(f"Poisson kernel in R^{n}: degree {K} guarantees tail < {tol:g} for |x| <= {r_max}")

P = poisson(KernelSpec(n, pole, K))
for r in (0.3, 0.6, 0.9):
    for t in (-1.0, 0.0, 0.5, 1.0):
        direction = np.array([np.sqrt(1 - t * t), 0.0, t])
        series = evaluate(P, r, direction)
        closed = (1 - r * r) / (1 - 2 * r * t + r * r) ** (n / 2)
        print(f"  r={r:.1f} t={t:+.1f}: series {series:.12f}  closed {closed:.12f}")

# --- Bergman-type kernel of order m ----------------------------------------
m = 2.0
Q = q_kernel(KernelSpec(n, pole, 12, order=m))
print(f"\norder-{m:g} kernel coefficients 2*gamma_k (k = 0..6):")
print(" ", np.array2string(Q.coeffs[:7], precision=4))

# the same kernel arises as twice the fractional derivative of the Poisson kernel
chained = frac_derivative(poisson(KernelSpec(n, pole, 12)), m)
print("  max |Q - 2*Lambda(P)| =", np.max(np.abs(Q.coeffs - 2 * chained.coeffs)))

# --- coefficient operators --------------------------------------------------
f = HarmonicExpansion(n, "zonal", [1.0, 0.5, 0.25, 0.125], pole=pole)
g = HarmonicExpansion(n, "zonal", [1.0, 1.0, 2.0, 4.0], pole=pole)
print("\nconvolution is the coefficientwise product:")
print("  f:", f.coeffs, " g:", g.coeffs, " f*g:", convolve(f, g).coeffs)

c = MultiplierSequence(n, "zonal", 1.0 / np.arange(1.0, 5.0))
print("applying the multiplier c_k = 1/(k+1):")
print("  c f:", apply_multiplier(c, f).coeffs)

print("fractional derivative of order m+1 multiplies block k by gamma_k:")
print("  Lambda f:", np.array2string(frac_derivative(f, m).coeffs, precision=4))

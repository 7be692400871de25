"""Certify coefficient multipliers between weighted mixed-norm spaces.

For each candidate multiplier and weight pair (alpha, beta) two
independent procedures run: the boundary growth criterion (does
(1-rho)^(m+1-alpha+beta) * I(rho) stay bounded?) and direct operator-norm
lower bounds from kernel probes.  The verdict is PASS when they agree.

The identity multiplier maps the alpha-space into the beta-space exactly
when beta >= alpha; damping the coefficients by (k+1)^(-t) buys t extra
room in the weight gap.
"""

from ballharm import (
    TheoremParams,
    condition2_sup,
    equivalence_verdict,
    probe_operator_norm,
)

m, dim, p = 2.0, 3, 1.0
probe_sizes = [1.0 - 2.0 ** (-j) for j in range(3, 9)]

print(f"dim={dim}, p={p:g}, derivative order m={m:g}\n")
print(f"{'multiplier':<14} {'alpha':>5} {'beta':>5} {'criterion':>10} "
      f"{'probes':>10} {'verdict':>8}")

for mult in ("ones", "powerlaw:0.5", "finite:6"):
    for alpha, beta in ((0.25, 0.5), (0.5, 0.5), (0.5, 0.25), (0.75, 0.25)):
        params = TheoremParams(p=p, alpha=alpha, beta=beta, m=m, dim=dim)
        cond2 = condition2_sup(mult, params, j_levels=list(range(3, 10)))
        probe = probe_operator_norm(mult, params, sizes=probe_sizes)
        check = equivalence_verdict(cond2, probe)
        print(f"{mult:<14} {alpha:>5.2f} {beta:>5.2f} {cond2.verdict:>10} "
              f"{probe.verdict:>10} {check.verdict:>8}")
    print()

print("growth detail for the identity multiplier, alpha=0.5, beta=0.25:")
params = TheoremParams(p=p, alpha=0.5, beta=0.25, m=m, dim=dim)
rep = condition2_sup("ones", params, j_levels=list(range(3, 10)))
print(f"  fitted growth exponent of I(rho): {rep.fitted_exponent:.4f} "
      f"(the kernel scale m+1 = {m+1:g})")
print(f"  weighted values Phi(rho) on the grid:")
for rho, phi in zip(rep.rho_grid, rep.values):
    print(f"    1-rho = {1-rho:.5f}:  Phi = {phi:.6f}")

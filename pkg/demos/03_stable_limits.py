"""Stable limits E~_mu and the limit Cherednik operators.

Padding mu with zeros and letting the number of variables grow, E_{mu 0^m}
settles down t-adically to an almost-symmetric function: polynomial in the
first few variables, symmetric in the rest.

Run: python demos/03_stable_limits.py
"""

from stablemac import convergence_witness, limit_Y, stable_E, weight_alpha_tilde
from stablemac.almostsym import project_pi
from stablemac.hhl import hhl_E
from stablemac.stablelimit import limit_Y1, truncated_Y1, truncation_valuations

for mu in [(1,), (2, 0), (0, 2)]:
    print(f"E~{mu} = {stable_E(mu).pretty()}")

mu = (0, 2)
E = stable_E(mu)
print(f"\nhow fast E_{mu}*0^m approaches pi(E~{mu}):")
print("  t-adic valuations of the difference, m = 0..4:", convergence_witness(mu, 4)["valuations"])
print(f"  pi_3 E~{mu} = {project_pi(E, 3)}")
print(f"  E_(0,2,0)   = {hhl_E((0, 2, 0))}")

# Y_1 on almost-symmetric functions is computed exactly (via a transfer
# matrix), and the finite truncations t^n rho Y_1^(n) are kept as a check
E20 = stable_E((2, 0))
lim = limit_Y1(E20)
print(f"\nY1 E~(2,0) = {lim.pretty()}")
for n in (3, 4, 5):
    print(f"  truncation n={n}: {truncated_Y1(E20, n).lowered().pretty()}")
print("  valuations of (truncation - limit):", truncation_valuations(E20, lim, range(3, 8)))
# here the truncations happen to be exact already; for E~(0,2) they are not
print(f"  same for E~{mu}:", truncation_valuations(E, limit_Y1(E), range(3, 8)))

print(f"\nweights: alpha~{mu} = {[str(a) for a in weight_alpha_tilde(mu)]}")
for r in (1, 2, 3):
    alpha = weight_alpha_tilde(mu)[r - 1] if r <= len(mu) else 0
    print(f"  Y_{r} E~{mu} == {alpha} * E~{mu}: {limit_Y(r, E) == E.scale(alpha)}")

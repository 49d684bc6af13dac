"""Exact scalars, Demazure-Lusztig operators and Cherednik operators.

Run: python demos/01_hecke_operators.py
"""

from stablemac import Q, T, XPoly, cherednik_Y, demazure_T, qt, relation_check
from stablemac.daha import perturbed_rep, weight_alpha
from stablemac.xpoly import compose_ops

# Scalars live in Q(q, t) and are always reduced.  Negative powers of q get
# cleared out of numerator and denominator.
qinv = Q ** -1
c = qinv * (1 - T) / (1 - qinv * T)
print("q^-1 (1-t) / (1 - q^-1 t) =", c)
print("its t-adic valuation:", c.t_valuation())

# Polynomials in x_1..x_n with Q(q,t) coefficients.
x1 = XPoly.variable(1, 2)
x2 = XPoly.variable(2, 2)
print("\nT_1 x1 =", demazure_T(1, x1))
print("T_1 x2 =", demazure_T(1, x2))
print("omega x1 =", compose_ops("w", x1))

# T_i satisfies (T - 1)(T + t) = 0
f = x1 * x1 * x2 + x2.scale(qt("q"))
Tf = demazure_T(1, f)
print("(T-1)(T+t) f == 0:", not (demazure_T(1, Tf) - Tf.scale(1 - T) - f.scale(T)))

# Cherednik operators commute and act triangularly; x1 is already an eigenvector
print("\nY_1 x1 =", cherednik_Y(1, x1), "  expected eigenvalue", weight_alpha((1, 0))[0])
print("Y_2 x1 =", cherednik_Y(2, x1))

# The relation checker runs every defining relation on every Laurent
# monomial in a box.  The perturbed version drops the (1-t) term from T_i.
print("\nrelations on n=3, exponents in [-1,2]:")
for r in relation_check(3, (-1, 2)):
    print(f"  {r.relation:<24} {r.status}  ({r.checked} monomials)")

print("\nsame thing with a broken T:")
for r in relation_check(3, (-1, 2), rep=perturbed_rep(3)):
    if r.status == "fail":
        print(f"  {r.relation:<24} fails at x^{tuple(r.counterexample['monomial'])}")

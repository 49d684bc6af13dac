"""Hall-Littlewood functions from Jing operators, the symmetric functions
A_lambda, and the pair family E~(mu|lambda) that spans the almost-symmetric
ring.

Run: python demos/04_hall_littlewood_and_pairs.py
"""

from stablemac import A_in_HLP, basis_certificate, gamma_mu, hall_littlewood_P, pair_weight, stable_E_pair
from stablemac.combinat import partitions
from stablemac.stablelimit import direct_pair_weight, hlp_text, pretty_hlp
from stablemac.symfunc import SymFunc, jing_B

# B_n(f) = <z^n> f[X - 1/z] Exp[(1-t) z X]; iterating from 1 gives P_lambda
print("B_2(1) =", jing_B(2, SymFunc.one()))
for lam in [(2,), (1, 1), (2, 1)]:
    print(f"P{list(lam)} =", hall_littlewood_P(lam))

# A_lambda: symmetrize E~_lambda all the way down.  Unitriangular in P.
print()
for d in range(1, 4):
    for lam in partitions(d):
        print(f"A{list(lam)} = {A_in_HLP(lam)}")

# symmetrizing E~_mu for a non-partition mu lands on a multiple of A_sort(mu)
for mu in [(0, 2), (1, 2), (0, 1, 2)]:
    print(f"gamma{mu} = {gamma_mu(mu)}")

print("\nsome pairs, tails written in the P basis:")
for mu, lam in [((), (2,)), ((1,), (1, 1)), ((0, 1), (1,)), ((0,), (2,))]:
    f = stable_E_pair(mu, lam)
    w = [str(x) for x in pair_weight(mu, lam)]
    print(f"  E~({mu}|{lam}) = {pretty_hlp(f)}")
    print(f"      weight {w}, read off from Y_r directly: {[str(x) for x in direct_pair_weight(mu, lam)]}")

# (0|2) is not admissible: the trailing zero in mu makes it collapse onto A_2
print("\nE~((0,)|(2,)) == E~(()|(2,)):", stable_E_pair((0,), (2,)) == stable_E_pair((), (2,)))
print("as text:", hlp_text(stable_E_pair((0,), (2,)), 1))

print("\nbasis certificates (admissible pairs vs dimension):")
for k, d in [(1, 2), (2, 2), (2, 3), (3, 3)]:
    c = basis_certificate(k, d)
    print(f"  k={k} d={d}: {c['count']} pairs, dim {c['dim']}, rank {c['rank']} -> {c['status']}")

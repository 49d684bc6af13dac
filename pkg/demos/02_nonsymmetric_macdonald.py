"""Nonsymmetric Macdonald polynomials two ways.

The eigen-oracle solves for the joint eigenvector of Y_1..Y_n directly.
The filling formula sums over non-attacking fillings.  They have nothing in
common except the answer.

Run: python demos/02_nonsymmetric_macdonald.py
"""

import time

from stablemac import compositions, enumerate_fillings, hhl_E, oracle_E

mu = (0, 2)
print(f"E_{mu} from the filling sum:\n  {hhl_E(mu)}")
print(f"E_{mu} from the eigen-oracle:\n  {oracle_E(mu)}")

print(f"\nfillings of {(1, 2)} with their statistics:")
for f in enumerate_fillings((1, 2)):
    print("  ", f.dump())

# a broader sweep
t0 = time.time()
count = 0
for n in range(1, 4):
    for d in range(4):
        for m in compositions(d, n):
            assert hhl_E(m) == oracle_E(m), m
            count += 1
print(f"\nagree on all {count} compositions with length <= 3 and size <= 3 ({time.time() - t0:.1f}s)")

"""
Four routes to the same multiplicity
====================================

The number of copies of ``D^b(M_S(w + (0, 0, j)))`` inside the decomposition
of ``D^b(M^d(f^*w))`` for rank ``r`` classes can be computed by

1. summing binomial products over index vectors,
2. counting tuples of Young diagrams decorated by a lattice vector,
3. expanding a lattice theta series,
4. running the recursive expansion engine on Chern characters.
"""

from qnk import a_count, a_infinity, a_tilde, enumerate_theta, lattice_theta_sum
from qnk.sod import terminal_multiplicities

r, d, jmax = 2, 3, 8

print("index vectors for r=2, d=3, j=2:")
for v in enumerate_theta(r, d, 2):
    print("   ", v.entries)

theta = lattice_theta_sum(r, -d, d, jmax)
engine = terminal_multiplicities(r, d, jmax)
print(f"{'j':>3} {'A_tilde':>8} {'A':>8} {'series':>8} {'engine':>8}")
for j in range(jmax + 1):
    print(f"{j:>3} {a_tilde(r, d, j):>8} {a_count(r, d, j):>8} {theta[j]:>8} {engine[j]:>8}")

# %%
# For j <= d the numbers no longer depend on d.
print("A_{2,inf}:", [a_infinity(2, j) for j in range(jmax + 1)])

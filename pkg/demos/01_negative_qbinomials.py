"""q-binomial coefficients with negative arguments
==================================================

The classical Gaussian binomial is defined for 0 <= k <= n.  Extending it to
every integer pair turns it into a Laurent polynomial in q that vanishes
outside three regions of the plane and obeys all the familiar identities.
"""

from qneg import binom, degree_profile, qbinom, region, six_forms

# The headline example: a coefficient with both entries negative.
print("qbinom(-3, -5) =", qbinom(-3, -5))

# At q = 1 these specialize to integer binomials with negative entries.
print("binom(-11, -19) =", binom(-11, -19))

# A small table: rows n = -4..4, columns k = -4..4, zeros exactly where the
# coefficient vanishes (k > n >= 0, n >= 0 > k, or 0 > k > n).
print("\ninteger table, n down, k across:")
for n in range(-4, 5):
    print(" ".join(f"{binom(n, k):6d}" for k in range(-4, 5)))

# Each pair lands in one of four regions.
for pair in ((3, 2), (-3, 2), (-3, -5), (-3, -2)):
    print(f"\nregion{pair} = {region(*pair).value}")
    print(f"  qbinom{pair} = {qbinom(*pair)}")
    print(f"  (valuation, degree) = {degree_profile(*pair)}")

# The symmetry and reflection group: six equivalent ways to write one
# coefficient, each a sign times a power of q times another coefficient.
print("\nthe six forms of qbinom(-3, 2):")
for prefactor, (n2, k2) in six_forms(-3, 2):
    print(f"  ({prefactor}) * qbinom({n2}, {k2})  =", prefactor * qbinom(n2, k2))

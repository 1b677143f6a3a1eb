"""Counting subsets of sets with a negative number of elements
==============================================================

A hybrid set maps elements to integer multiplicities, so a set can have -3
elements.  Counting its k-element subsets, weighted by q to the sum of their
elements, recovers the q-binomial coefficient up to an explicit sign.
"""

from qneg import k_subsets, qbinom, qbinom_via_subsets, standard_new_set, subset_count

# The standard new set with -3 elements.
x = standard_new_set(-3)
print("X_-3 =", x, " with element count", x.element_count())

# Its 2-element subsets are multisets over {-1, -2, -3}: six of them.
print("\n2-element subsets and their element sums:")
for y in k_subsets(-3, 2):
    print(f"  {y}   sigma = {y.sigma()}")
print("count =", subset_count(-3, 2), " |binom(-3, 2)| =", abs(qbinom(-3, 2).eval_at_one()))

# Its -4-element subsets contain X_-3 rather than being contained in it.
print("\n-4-element subsets:")
for y in k_subsets(-3, -4):
    print(f"  {y}   sigma = {y.sigma()}")

# Weighting each subset by q^(sigma - k(k-1)/2) and applying the region sign
# reproduces the q-binomial coefficient exactly.
for pair in ((-3, 2), (-3, -4), (4, 2)):
    combinatorial = qbinom_via_subsets(*pair)
    closed_form = qbinom(*pair)
    print(f"\nqbinom_via_subsets{pair} = {combinatorial}")
    print(f"qbinom{pair}             = {closed_form}")
    assert combinatorial == closed_form

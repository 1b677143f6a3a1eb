"""Apery numbers at negative indices
====================================

Summing binom(n,k)^2 binom(n+k,k)^2 over all integers k (the support stays
finite) extends the Apery numbers to every integer index.  The extension
makes a hidden symmetry visible, A(-n) = A(n-1), which ties the Beukers and
Coster supercongruences to each other.
"""

from qneg import apery, verify_apery_congruence, verify_apery_symmetry

# The sequence in both directions.
print("n, A(n) for n = -5..5:")
for n in range(-5, 6):
    print(f"  {n:3d}  {apery(n)}")

# The symmetry pairs A(-n) with A(n-1).
print("\nA(-n) = A(n-1) for n = 0..25:",
      all(verify_apery_symmetry(n) for n in range(26)))

# Supercongruences modulo p^(3r), checked exactly at p = 5.
checks = [
    ("beukers", 5, 1, 1, "A(4) = A(0) mod 125"),
    ("beukers", 5, 1, 5, "A(24) = A(4) mod 125"),
    ("coster", 5, 1, 1, "A(5) = A(1) mod 125"),
    ("coster", 5, 1, 2, "A(10) = A(2) mod 125"),
    ("coster", 5, 2, 1, "A(25) = A(5) mod 15625"),
]
print()
for variant, p, r, m, label in checks:
    ok = verify_apery_congruence(p, r, m, variant)
    print(f"{label:28s} [{variant}]: {ok}")

# The two families are one statement: Beukers at m is Coster at -m.
m = 3
print(f"\nA(5*{m} - 1) = A(-5*{m}) = {apery(-5 * m)} (symmetry in action)")

"""Binomial theorems for negative powers
========================================

With q-commuting variables (yx = qxy), the power (x+y)^n expands with
q-binomial coefficients for every integer n: around x = 0 with k ascending
from 0, or around x = infinity with k descending from n.  A commutative
version expands the shifted factorial (-x; q)_n in powers of x.
"""

from qneg import (
    Direction,
    pochhammer_expansion,
    power_xy,
    qbinom,
    series_mul,
    verify_chu_vandermonde,
)

# (x+y)^-1 around x = 0: the geometric series, normal-ordered.
s = power_xy(-1, Direction.FROM_ZERO, 6)
print("(x+y)^-1, coefficients of x^k y^(-1-k):")
for k in range(6):
    print(f"  C({k}) = {s.coefficient(k)}")

# The same power around x = infinity.
t = power_xy(-1, Direction.FROM_INFINITY, 4)
print("\n(x+y)^-1 from infinity, k descending from -1:")
for k in range(-1, -5, -1):
    print(f"  C({k}) = {t.coefficient(k)}")

# Both expansions read off qbinom(n, k) in their windows.
for n in (-3, 4):
    fz = power_xy(n, Direction.FROM_ZERO, 8)
    assert all(fz.coefficient(k) == qbinom(n, k) for k in range(8))
    fi = power_xy(n, Direction.FROM_INFINITY, 8)
    assert all(fi.coefficient(k) == qbinom(n, k) for k in range(n, n - 8, -1))
print("\nboth expansion directions match qbinom for n = -3 and n = 4")

# Series multiply like the powers they represent: (x+y)^-2 (x+y)^2 = 1.
product = series_mul(
    power_xy(-2, Direction.FROM_ZERO, 10), power_xy(2, Direction.FROM_ZERO, 10)
)
print("(x+y)^-2 * (x+y)^2 =", dict(product.terms), "(total degree", f"{product.n})")

# The commutative q-binomial theorem for (-x; q)_n, including negative n.
print("\n(-x; q)_-3 coefficients, against q^(k(k-1)/2) qbinom(-3, k):")
poch = pochhammer_expansion(-3, 5)
for k in range(5):
    expect = qbinom(-3, k).shift(k * (k - 1) // 2)
    print(f"  x^{k}: {poch.coefficient(k)}")
    assert poch.coefficient(k) == expect

# Chu-Vandermonde convolution holds for any integer top entries once k >= 0,
# and in a shifted form when everything is negative.
print("\nChu-Vandermonde (-3, -1, k=4):", verify_chu_vandermonde(-3, -1, 4))
print("Chu-Vandermonde (-2, -2, k=-3):", verify_chu_vandermonde(-2, -2, -3))

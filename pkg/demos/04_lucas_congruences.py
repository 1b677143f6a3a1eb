"""Lucas congruences for negative entries, and their q-analog
=============================================================

Negative integers have infinite base-p expansions that are eventually all
p-1, so Lucas' digit-by-digit congruence still makes sense: the transient
digits contribute finitely many factors and the tail contributes 1 (or kills
the product).  Modulo the cyclotomic polynomial Phi_m(q), the same shape of
statement holds for q-binomial coefficients, with no primality needed.
"""

from qneg import (
    binom,
    congruent_mod,
    cyclotomic,
    freshman_congruence,
    lucas_product,
    padic_digits,
    q_lucas_rhs,
    qbinom,
    verify_lucas,
    verify_q_lucas,
)

# Base-7 digits of two negative integers.
for n in (-11, -19):
    d = padic_digits(n, 7)
    print(f"{n} = {d.preperiodic} then repeating {d.eventual} (base 7)")

# binom(-11, -19) mod 7 from digits alone, no 43758 in sight.
print("\nlucas_product(-11, -19, 7) =", lucas_product(-11, -19, 7))
print("binom(-11, -19) =", binom(-11, -19), " and 43758 mod 7 =", 43758 % 7)
print("verify_lucas(-11, -19, 7):", verify_lucas(-11, -19, 7))

# The q-analog, modulo Phi_3(q) = 1 + q + q^2.
mod3 = cyclotomic(3)
print("\nPhi_3(q) =", mod3.phi)
lhs = qbinom(-4, -8)
rhs = q_lucas_rhs(-4, -8, 3)
print("qbinom(-4, -8) =", lhs)
print("q-Lucas right-hand side =", rhs)
print("congruent mod Phi_3:", congruent_mod(lhs, rhs, mod3))
print("verify_q_lucas(-4, -8, 3):", verify_q_lucas(-4, -8, 3))

# Setting q = 1 recovers the integer congruence mod 3.
print("at q=1:", lhs.eval_at_one(), "=", rhs.eval_at_one(), "(mod 3):",
      (lhs.eval_at_one() - rhs.eval_at_one()) % 3 == 0)

# The engine behind all of this is the freshman's dream for q-commuting
# variables: (x+y)^m = x^m + y^m mod Phi_m(q), prime or not.
print("\nfreshman's dream for m = 2..12:",
      all(freshman_congruence(m) for m in range(2, 13)))

# Composite moduli work too: a sweep at m = 6.
ok = all(verify_q_lucas(n, k, 6) for n in range(-10, 11) for k in range(-10, 11))
print("q-Lucas sweep at composite m = 6:", ok)

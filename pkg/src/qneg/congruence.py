"""Lucas-type congruences for binomial coefficients with any integer entries.

The base-b expansion of a negative integer is infinite but eventually all
digits equal b-1, so digit-by-digit statements still make sense.  The integer
Lucas theorem holds modulo any prime p for all integers n and k; its q-analog
holds modulo the cyclotomic polynomial Phi_m(q) for any integer m >= 2, no
primality required.
"""

from __future__ import annotations

import dataclasses

from .laurent import LaurentPoly, congruent_mod, cyclotomic
from .qbinom import binom, qbinom

__all__ = [
    "DigitSplit",
    "PadicDigits",
    "digit_split",
    "padic_digits",
    "is_prime",
    "lucas_product",
    "verify_lucas",
    "verify_q_lucas",
    "q_lucas_rhs",
]


@dataclasses.dataclass(frozen=True)
class DigitSplit:
    """One step of base expansion: original = low + high * base with the
    low digit in [0, base)."""

    base: int
    low: int
    high: int


@dataclasses.dataclass(frozen=True)
class PadicDigits:
    """Base-b digits, low digit first: a finite transient followed by a
    single digit repeating forever (0 for n >= 0, base-1 for n < 0)."""

    base: int
    preperiodic: tuple[int, ...]
    eventual: int

    def digit(self, i: int) -> int:
        if i < len(self.preperiodic):
            return self.preperiodic[i]
        return self.eventual


def digit_split(n: int, base: int) -> DigitSplit:
    """Split n = low + high*base with low in [0, base).

    The remainder is always nonnegative (floor division toward minus
    infinity), which is what digit statements about negative n require.

    >>> digit_split(-11, 7)
    DigitSplit(base=7, low=3, high=-2)
    """
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    low = n % base
    return DigitSplit(base, low, (n - low) // base)


def padic_digits(n: int, base: int) -> PadicDigits:
    """Expand n in base b until the quotient reaches its fixed point, 0 for
    nonnegative n or -1 for negative n.

    >>> padic_digits(-11, 7)
    PadicDigits(base=7, preperiodic=(3, 5), eventual=6)
    """
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    digits: list[int] = []
    while n not in (0, -1):
        split = digit_split(n, base)
        digits.append(split.low)
        n = split.high
    return PadicDigits(base, tuple(digits), 0 if n == 0 else base - 1)


def is_prime(p: int) -> bool:
    """Deterministic trial division; ample for desk-scale moduli."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def lucas_product(n: int, k: int, p: int) -> int:
    """The digit-wise product prod binom(n_i, k_i) mod p over the aligned
    base-p digit streams of n and k, reduced to [0, p).

    The infinite tail contributes a single factor: once both quotients reach
    their fixed points the digit pairs repeat as (0,0), (p-1,0) or
    (p-1,p-1), each with binomial 1, or as (0,p-1), whose binomial 0 kills
    the product.  One representative factor of the stable pair is therefore
    appended after the transients.

    >>> lucas_product(-11, -19, 7)
    1
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    acc = 1
    while not (n in (0, -1) and k in (0, -1)):
        sn, sk = digit_split(n, p), digit_split(k, p)
        acc = acc * binom(sn.low, sk.low) % p
        n, k = sn.high, sk.high
    stable_n = 0 if n == 0 else p - 1
    stable_k = 0 if k == 0 else p - 1
    return acc * binom(stable_n, stable_k) % p


def verify_lucas(n: int, k: int, p: int) -> bool:
    """Check the single-step Lucas congruence modulo the prime p:
    binom(n, k) = binom(n0, k0) * binom(n', k') where n = n0 + n'p and
    k = k0 + k'p with n0, k0 in [0, p)."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    sn, sk = digit_split(n, p), digit_split(k, p)
    rhs = binom(sn.low, sk.low) * binom(sn.high, sk.high)
    return (binom(n, k) - rhs) % p == 0


def q_lucas_rhs(n: int, k: int, m: int) -> LaurentPoly:
    """The right-hand side of the q-Lucas congruence: qbinom(n0, k0) scaled
    by the integer binom(n', k'), with the digit splits taken base m.

    >>> q_lucas_rhs(-4, -8, 3)
    LaurentPoly('-2 - 2*q')
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    sn, sk = digit_split(n, m), digit_split(k, m)
    return qbinom(sn.low, sk.low) * binom(sn.high, sk.high)


def verify_q_lucas(n: int, k: int, m: int) -> bool:
    """Check qbinom(n, k) = qbinom(n0, k0) * binom(n', k') mod Phi_m(q).

    Unlike the integer statement, no primality of m is needed.
    """
    return congruent_mod(qbinom(n, k), q_lucas_rhs(n, k, m), cyclotomic(m))

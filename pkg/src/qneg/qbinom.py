"""Gaussian binomial coefficients for arbitrary integer arguments.

The coefficient is nonzero precisely on three regions of the (n, k) plane:
the classical triangle 0 <= k <= n, the half-plane n < 0 <= k, and the wedge
k <= n < 0.  On the classical region it is the familiar Gaussian polynomial;
on the other two it is a reflected copy times a sign and a power of q, which
makes it a genuine Laurent polynomial.

Two independent evaluation strategies are provided: region-wise closed forms
(`qbinom`) and a dynamic program on the q-Pascal recursion (`qbinom_pascal`).
They must agree everywhere, and the test suite holds them to that.
"""

from __future__ import annotations

import enum
import functools
import math

from .laurent import ONE, ZERO, LaurentPoly

__all__ = [
    "Region",
    "sgn",
    "region",
    "qbinom",
    "qbinom_pascal",
    "binom",
    "six_forms",
    "degree_profile",
]


class Region(enum.Enum):
    """The four-way partition of integer pairs (n, k)."""

    CLASSICAL = "classical"              # 0 <= k <= n
    NEGATIVE_N = "negative-n"            # n < 0 <= k
    DOUBLE_NEGATIVE = "double-negative"  # k <= n < 0
    VANISHING = "vanishing"              # k > n >= 0, n >= 0 > k, or 0 > k > n


def sgn(k: int) -> int:
    """1 if k >= 0, -1 if k < 0."""
    return 1 if k >= 0 else -1


def region(n: int, k: int) -> Region:
    if n >= 0:
        return Region.CLASSICAL if 0 <= k <= n else Region.VANISHING
    if k >= 0:
        return Region.NEGATIVE_N
    return Region.DOUBLE_NEGATIVE if k <= n else Region.VANISHING


def _classical_coeffs(n: int, k: int) -> list[int]:
    """Ascending coefficients of the classical Gaussian polynomial, 0 <= k <= n.

    Built as the product over i = 1..k of (1 - q^(n-k+i)) / (1 - q^i) with the
    division performed incrementally: every partial quotient is itself a
    Gaussian polynomial, so each division is exact (asserted).
    """
    k = min(k, n - k)
    coeffs = [1]
    for i in range(1, k + 1):
        top = n - k + i
        # multiply by (1 - q^top)
        prod = coeffs + [0] * top
        for j in range(len(coeffs)):
            prod[j + top] -= coeffs[j]
        # divide by (1 - q^i): ascending synthetic division g[j] = f[j] + g[j-i]
        width = len(prod) - i
        out = [0] * width
        for j in range(len(prod)):
            c = prod[j] + (out[j - i] if j >= i else 0)
            if j < width:
                out[j] = c
            else:
                assert c == 0, "Gaussian binomial division left a remainder"
        coeffs = out
    return coeffs


@functools.lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """The q-binomial coefficient of (n, k) as a canonical Laurent polynomial.

    Zero on the vanishing region; the classical product on 0 <= k <= n; and a
    sign times a q-power times a classical coefficient on the two negative
    regions, via the reflection rules:

        n < 0 <= k:   (-1)^k * q^(k(2n-k+1)/2) * qbinom(k-n-1, k)
        k <= n < 0:   (-1)^(n-k) * q^((n(n+1)-k(k+1))/2) * qbinom(-k-1, -n-1)

    The cache is process-wide and transparent: values are immutable and every
    strategy computes the identical canonical form.

    >>> qbinom(-3, -5)
    LaurentPoly('q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3')
    >>> qbinom(5, -2)
    LaurentPoly('0')
    """
    reg = region(n, k)
    if reg is Region.VANISHING:
        return ZERO
    if reg is Region.CLASSICAL:
        return LaurentPoly(0, _classical_coeffs(n, k))
    if reg is Region.NEGATIVE_N:
        doubled = k * (2 * n - k + 1)
        assert doubled % 2 == 0
        sign = -1 if k % 2 else 1
        return (qbinom(k - n - 1, k) * sign).shift(doubled // 2)
    doubled = n * (n + 1) - k * (k + 1)
    assert doubled % 2 == 0
    sign = -1 if (n - k) % 2 else 1
    return (qbinom(-k - 1, -n - 1) * sign).shift(doubled // 2)


def binom(n: int, k: int) -> int:
    """The integer binomial coefficient for all integer n, k: the value of
    qbinom(n, k) at q = 1.

    Computed through the same region reflections with an integer kernel; the
    test suite pins it to qbinom(n, k).eval_at_one().

    >>> binom(-11, -19)
    43758
    """
    reg = region(n, k)
    if reg is Region.VANISHING:
        return 0
    if reg is Region.CLASSICAL:
        return math.comb(n, k)
    if reg is Region.NEGATIVE_N:
        return (-1 if k % 2 else 1) * math.comb(k - n - 1, k)
    return (-1 if (n - k) % 2 else 1) * math.comb(-k - 1, -n - 1)


def _pascal_nonnegative(n: int, k: int) -> LaurentPoly:
    # Classical triangle, filled upward from row 0.
    if k < 0 or k > n:
        return ZERO
    row: list[LaurentPoly] = [ONE]
    for m in range(1, n + 1):
        new = [ONE]  # seed C(m, 0) = 1
        for j in range(1, m + 1):
            above = row[j] if j < m else ZERO
            new.append(row[j - 1] + above.shift(j))
        assert new[m] == ONE, "derived corner disagrees with the C(n,n)=1 seed"
        row = new
    return row[k]


def _pascal_negative(n: int, k: int) -> LaurentPoly:
    # Negative rows, filled downward from row 0 by the inverted recursion
    #   C(m, j) = q^-j * (C(m+1, j) - C(m, j-1))      marching j upward,
    #   C(m, j) = C(m+1, j+1) - q^(j+1) * C(m, j+1)   marching j downward,
    # anchored at the seed C(m, m) = 1 of each row.
    lo = min(n, k, -1) - 1
    hi = max(k, 0) + 1
    above = {j: (ONE if j == 0 else ZERO) for j in range(lo, hi + 1)}
    for m in range(-1, n - 1, -1):
        cur = {m: ONE}
        for j in range(m + 1, hi + 1):
            if m == -1 and j == 0:
                # the recursion instance (n, k) = (0, 0) is excluded; the
                # seed C(-1, 0) = 1 takes over here
                cur[0] = ONE
            else:
                cur[j] = (above[j] - cur[j - 1]).shift(-j)
        if m < -1:
            # the C(n, 0) = 1 seed family is redundant but must stay consistent
            assert cur[0] == ONE, "derived C(n,0) disagrees with the seed"
        for j in range(m - 1, lo - 1, -1):
            cur[j] = above[j + 1] - cur[j + 1].shift(j + 1)
        above = cur
    return above[k]


@functools.lru_cache(maxsize=None)
def qbinom_pascal(n: int, k: int) -> LaurentPoly:
    """Independent evaluation of qbinom(n, k) by dynamic programming on the
    q-Pascal recursion C(n,k) = C(n-1,k-1) + q^k C(n-1,k), seeded with
    C(n,0) = C(n,n) = 1.

    Nonnegative rows fill upward in n; negative rows fill downward using the
    recursion solved for the lower row, marching k outward from the anchors.

    >>> qbinom_pascal(4, 2)
    LaurentPoly('1 + q + 2*q^2 + q^3 + q^4')
    """
    if n >= 0:
        return _pascal_nonnegative(n, k)
    return _pascal_negative(n, k)


def six_forms(n: int, k: int) -> list[tuple[LaurentPoly, tuple[int, int]]]:
    """The six (prefactor, index) records whose evaluations all reproduce
    qbinom(n, k): the five transformed forms of the reflection/symmetry group
    in the order they arise, closed off by the identity as the sixth record.

    >>> six_forms(-3, 2)[4]
    (LaurentPoly('q^-7'), (4, 2))
    """
    half_nk = (n * (n + 1) - k * (k + 1)) // 2
    half_k = (k * (2 * n - k + 1)) // 2
    pre_nk = LaurentPoly.q_power(half_nk, (-1 if (n - k) % 2 else 1) * sgn(n - k))
    pre_k = LaurentPoly.q_power(half_k, (-1 if k % 2 else 1) * sgn(k))
    return [
        (ONE, (n, n - k)),
        (pre_nk, (-k - 1, n - k)),
        (pre_nk, (-k - 1, -n - 1)),
        (pre_k, (k - n - 1, -n - 1)),
        (pre_k, (k - n - 1, k)),
        (ONE, (n, k)),
    ]


def degree_profile(n: int, k: int) -> tuple[int, int] | None:
    """Predicted (valuation, degree) of qbinom(n, k), or None where it is zero.

    >>> degree_profile(-3, 2)
    (-7, -3)
    """
    reg = region(n, k)
    if reg is Region.VANISHING:
        return None
    if reg is Region.CLASSICAL:
        return 0, k * (n - k)
    if reg is Region.NEGATIVE_N:
        low = k * (2 * n - k + 1) // 2
        return low, low + k * (-n - 1)
    low = (n * (n + 1) - k * (k + 1)) // 2
    return low, low + (-n - 1) * (n - k)

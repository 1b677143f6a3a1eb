"""Apery numbers for every integer index, via binomials with negative entries.

Allowing negative entries turns the classical sum over k = 0..n into a sum
over all integers whose support stays finite, extends A to negative indices
with the symmetry A(-n) = A(n-1), and makes the Beukers and Coster
supercongruences two faces of one statement.
"""

from __future__ import annotations

from .congruence import is_prime
from .qbinom import binom

__all__ = ["apery", "verify_apery_symmetry", "verify_apery_congruence"]

APERY_VARIANTS = ("beukers", "coster")


def _term(n: int, k: int) -> int:
    return binom(n, k) ** 2 * binom(n + k, k) ** 2


def apery(n: int) -> int:
    """A(n) = sum over all integers k of binom(n,k)^2 * binom(n+k,k)^2.

    The support is k in [0, n] for n >= 0 and k in [0, -n-1] for n < 0;
    two extra terms beyond each end are checked to vanish before trusting
    the window.

    >>> [apery(n) for n in (0, 1, 2, 3)]
    [1, 5, 73, 1445]
    """
    hi = n if n >= 0 else -n - 1
    for k in (-2, -1, hi + 1, hi + 2):
        assert _term(n, k) == 0, f"nonzero Apery term outside window at k={k}"
    return sum(_term(n, k) for k in range(hi + 1))


def verify_apery_symmetry(n: int) -> bool:
    """Check the reflection symmetry A(-n) = A(n-1)."""
    return apery(-n) == apery(n - 1)


def verify_apery_congruence(p: int, r: int, m: int, variant: str) -> bool:
    """Check a supercongruence modulo p^(3r) for a prime p >= 5 and positive
    integers r, m:

        beukers:  A(p^r m - 1) = A(p^(r-1) m - 1)
        coster:   A(p^r m)     = A(p^(r-1) m)

    Exact integer arithmetic throughout; no modular shortcuts.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"supercongruences require a prime p >= 5, got {p}")
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    if variant not in APERY_VARIANTS:
        raise ValueError(f"variant must be one of {APERY_VARIANTS}, got {variant!r}")
    offset = -1 if variant == "beukers" else 0
    lhs = apery(p**r * m + offset)
    rhs = apery(p ** (r - 1) * m + offset)
    return (lhs - rhs) % p ** (3 * r) == 0
